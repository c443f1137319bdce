#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "freedl/errors.hpp"
#include "freedl/oracle.hpp"

namespace freedl {

namespace {

// All frames of the class with exactly W worlds, pruned to canonical
// representatives under world permutation.  Cached per (tag, n, W).
const std::vector<Frame>& frames_for(const FrameClass& fc, int W) {
  static std::map<std::tuple<int, int, int>, std::vector<Frame>> cache;
  auto key = std::make_tuple(static_cast<int>(fc.tag), fc.base_modalities, W);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  std::vector<Frame> out;
  int nrel = fc.relation_count();
  int base = fc.base_modalities;

  if (fc.tag == FrameClassTag::LTLFinite || fc.tag == FrameClassTag::LTLInfinitePrefix) {
    Frame f(W, 2);
    for (int t = 0; t + 1 < W; ++t) f.add_edge(1, t, t + 1);
    for (int t = 0; t < W; ++t)
      for (int t2 = t + 1; t2 < W; ++t2) f.add_edge(2, t, t2);
    out.push_back(f);
    return cache[key] = out, cache[key];
  }

  std::vector<int> perm(static_cast<size_t>(W));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do { perms.push_back(perm); } while (std::next_permutation(perm.begin(), perm.end()));

  auto encode = [&](const Frame& f) {
    std::vector<std::uint32_t> enc;
    for (const auto& rel : f.succ) enc.insert(enc.end(), rel.begin(), rel.end());
    return enc;
  };
  auto is_canonical = [&](const Frame& f) {
    auto base_enc = encode(f);
    for (const auto& p : perms) {
      Frame g(W, f.modality_count);
      for (int i = 1; i <= f.modality_count; ++i)
        for (int w = 0; w < W; ++w)
          for (int v = 0; v < W; ++v)
            if (f.edge(i, w, v)) g.add_edge(i, p[static_cast<size_t>(w)], p[static_cast<size_t>(v)]);
      if (encode(g) < base_enc) return false;
    }
    return true;
  };

  int bits = W * W;
  std::uint64_t per_rel = 1ull << bits;
  std::vector<std::uint64_t> rel_code(static_cast<size_t>(base), 0);
  for (;;) {
    Frame f(W, nrel);
    for (int i = 0; i < base; ++i)
      for (int w = 0; w < W; ++w)
        for (int v = 0; v < W; ++v)
          if ((rel_code[static_cast<size_t>(i)] >> (w * W + v)) & 1ull) f.add_edge(i + 1, w, v);

    bool class_ok = true;
    if (fc.tag == FrameClassTag::S5n) {
      for (int i = 1; i <= base && class_ok; ++i)
        for (int w = 0; w < W && class_ok; ++w) {
          if (!f.edge(i, w, w)) class_ok = false;
          for (int v = 0; v < W && class_ok; ++v) {
            if (f.edge(i, w, v) != f.edge(i, v, w)) class_ok = false;
            if (class_ok && f.edge(i, w, v))
              for (int z = 0; z < W; ++z)
                if (f.edge(i, v, z) && !f.edge(i, w, z)) { class_ok = false; break; }
          }
        }
    }
    if (class_ok && (fc.tag == FrameClassTag::KStarN || fc.tag == FrameClassTag::KfStarN)) {
      std::vector<std::uint32_t> r(static_cast<size_t>(W), 0);
      for (int i = 1; i <= base; ++i)
        for (int w = 0; w < W; ++w)
          r[static_cast<size_t>(w)] |= f.succ[static_cast<size_t>(i - 1)][static_cast<size_t>(w)];
      bool changed = true;
      while (changed) {
        changed = false;
        for (int w = 0; w < W; ++w)
          for (int v = 0; v < W; ++v)
            if ((r[static_cast<size_t>(w)] >> v) & 1u) {
              std::uint32_t nw = r[static_cast<size_t>(w)] | r[static_cast<size_t>(v)];
              if (nw != r[static_cast<size_t>(w)]) { r[static_cast<size_t>(w)] = nw; changed = true; }
            }
      }
      for (int w = 0; w < W; ++w) {
        f.succ[static_cast<size_t>(base)][static_cast<size_t>(w)] = r[static_cast<size_t>(w)];
        if (fc.tag == FrameClassTag::KfStarN && ((r[static_cast<size_t>(w)] >> w) & 1u)) class_ok = false;
      }
    }
    if (class_ok && is_canonical(f)) out.push_back(f);

    int i = 0;
    while (i < base) {
      if (++rel_code[static_cast<size_t>(i)] < per_rel) break;
      rel_code[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == base || base == 0) break;
  }
  return cache[key] = out, cache[key];
}

std::vector<std::vector<std::uint32_t>> domain_assignments(const Frame& f, int pool,
                                                           DomainMode mode) {
  std::vector<std::vector<std::uint32_t>> out;
  int W = f.world_count;
  std::uint32_t full = (1u << pool) - 1;
  if (mode == DomainMode::Constant) {
    out.push_back(std::vector<std::uint32_t>(static_cast<size_t>(W), full));
    return out;
  }
  // Expanding: all monotone nonempty per-world subsets that jointly use the
  // whole pool (smaller pools cover the other shapes).
  std::vector<std::uint32_t> cur(static_cast<size_t>(W), 1);
  for (;;) {
    bool mono = true;
    std::uint32_t used = 0;
    for (auto v : cur) used |= v;
    for (int i = 1; i <= f.modality_count && mono; ++i)
      for (int w = 0; w < W && mono; ++w)
        for (int v = 0; v < W; ++v)
          if (f.edge(i, w, v) && (cur[static_cast<size_t>(w)] & ~cur[static_cast<size_t>(v)])) {
            mono = false;
            break;
          }
    if (mono && used == full) out.push_back(cur);
    int w = 0;
    while (w < W) {
      if (++cur[static_cast<size_t>(w)] <= full) break;
      cur[static_cast<size_t>(w)] = 1;
      ++w;
    }
    if (w == W) break;
  }
  return out;
}

std::vector<std::uint32_t> encode_model(const Interpretation& m, const std::vector<int>& perm) {
  std::vector<std::uint32_t> enc;
  auto pmask = [&](std::uint32_t mask) {
    std::uint32_t r = 0;
    for (int d = 0; d < m.pool_size; ++d)
      if ((mask >> d) & 1u) r |= (1u << perm[static_cast<size_t>(d)]);
    return r;
  };
  for (auto v : m.domain) enc.push_back(pmask(v));
  for (const auto& [n, ext] : m.concept_ext) {
    (void)n;
    for (auto v : ext) enc.push_back(pmask(v));
  }
  for (const auto& [n, ext] : m.role_ext) {
    (void)n;
    for (const auto& rows : ext) {
      std::vector<std::uint32_t> prows(static_cast<size_t>(m.pool_size), 0);
      for (int d = 0; d < m.pool_size; ++d)
        prows[static_cast<size_t>(perm[static_cast<size_t>(d)])] = pmask(rows[static_cast<size_t>(d)]);
      enc.insert(enc.end(), prows.begin(), prows.end());
    }
  }
  for (const auto& [n, vals] : m.individuals) {
    (void)n;
    for (int v : vals)
      enc.push_back(v < 0 ? 0xffffffffu : static_cast<std::uint32_t>(perm[static_cast<size_t>(v)]));
  }
  return enc;
}

bool is_element_canonical(const Interpretation& m) {
  std::vector<int> perm(static_cast<size_t>(m.pool_size));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> self = encode_model(m, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (encode_model(m, perm) < self) return false;
  }
  return true;
}

}  // namespace

void enumerate_models(const Signature& sig, const ModelBounds& bounds,
                      const std::function<bool(const Interpretation&)>& callback,
                      std::int64_t work_cap, bool prune_element_symmetry) {
  std::int64_t budget = env_work_cap(work_cap);
  std::int64_t produced = 0;

  std::vector<int> world_sizes;
  if (bounds.frame_class.fixed_ltl_length >= 0)
    world_sizes.push_back(bounds.frame_class.fixed_ltl_length + 1);
  else
    for (int w = 1; w <= bounds.max_worlds; ++w) world_sizes.push_back(w);

  std::vector<std::string> cnames(sig.concept_names.begin(), sig.concept_names.end());
  std::vector<std::string> rnames(sig.role_names.begin(), sig.role_names.end());
  std::vector<std::string> inames(sig.individual_names.begin(), sig.individual_names.end());

  for (int W : world_sizes) {
    for (const Frame& frame : frames_for(bounds.frame_class, W)) {
      for (int pool = 1; pool <= bounds.max_domain; ++pool) {
        for (const auto& dom : domain_assignments(frame, pool, bounds.domain_mode)) {
          Interpretation m;
          m.frame = frame;
          m.pool_size = pool;
          m.domain = dom;
          for (const auto& n : cnames) m.concept_ext[n].assign(static_cast<size_t>(W), 0);
          for (const auto& n : rnames)
            m.role_ext[n].assign(static_cast<size_t>(W),
                                 std::vector<std::uint32_t>(static_cast<size_t>(pool), 0));
          for (const auto& n : inames) m.individuals[n].assign(static_cast<size_t>(W), -1);

          struct Slot {
            int kind;  // 0 concept, 1 role, 2 individual
            std::string name;
            int w;
          };
          std::vector<Slot> slots;
          for (const auto& n : cnames)
            for (int w = 0; w < W; ++w) slots.push_back({0, n, w});
          for (const auto& n : rnames)
            for (int w = 0; w < W; ++w) slots.push_back({1, n, w});
          for (const auto& n : inames)
            for (int w = 0; w < W; ++w) slots.push_back({2, n, w});

          std::vector<std::int64_t> counter(slots.size(), 0);
          auto slot_card = [&](const Slot& s) -> std::int64_t {
            int k = std::popcount(dom[static_cast<size_t>(s.w)]);
            switch (s.kind) {
              case 0: return 1ll << k;
              case 1: return 1ll << (k * k);
              default: return k + 1;  // undefined, or an element of the world's domain
            }
          };
          auto apply_slot = [&](const Slot& s, std::int64_t code) {
            std::vector<int> elems;
            for (int d = 0; d < pool; ++d)
              if ((dom[static_cast<size_t>(s.w)] >> d) & 1u) elems.push_back(d);
            int k = static_cast<int>(elems.size());
            switch (s.kind) {
              case 0: {
                std::uint32_t mask = 0;
                for (int b = 0; b < k; ++b)
                  if ((code >> b) & 1ll) mask |= (1u << elems[static_cast<size_t>(b)]);
                m.concept_ext[s.name][static_cast<size_t>(s.w)] = mask;
                break;
              }
              case 1: {
                auto& rows = m.role_ext[s.name][static_cast<size_t>(s.w)];
                std::fill(rows.begin(), rows.end(), 0u);
                for (int a = 0; a < k; ++a)
                  for (int b = 0; b < k; ++b)
                    if ((code >> (a * k + b)) & 1ll)
                      rows[static_cast<size_t>(elems[static_cast<size_t>(a)])] |=
                          (1u << elems[static_cast<size_t>(b)]);
                break;
              }
              default:
                m.individuals[s.name][static_cast<size_t>(s.w)] =
                    code == 0 ? -1 : elems[static_cast<size_t>(code - 1)];
                break;
            }
          };

          bool stop = false;
          for (;;) {
            for (std::size_t i = 0; i < slots.size(); ++i) apply_slot(slots[i], counter[i]);
            bool mode_ok = true;
            if (bounds.designation_mode == DesignationMode::Total) {
              for (const auto& [n, vals] : m.individuals) {
                (void)n;
                for (int v : vals)
                  if (v < 0) { mode_ok = false; break; }
              }
            }
            if (mode_ok && bounds.rda && !model_properties(m).is_rda) mode_ok = false;
            if (mode_ok && prune_element_symmetry && pool > 1 && !is_element_canonical(m))
              mode_ok = false;
            if (mode_ok) {
              if (++produced > budget)
                throw ResourceError("model enumeration exceeded the work cap");
              if (!callback(m)) { stop = true; break; }
            }
            std::size_t i = 0;
            while (i < slots.size()) {
              if (++counter[i] < slot_card(slots[i])) break;
              counter[i] = 0;
              ++i;
            }
            if (i == slots.size()) break;
          }
          if (stop) return;
        }
      }
    }
  }
}

}  // namespace freedl
