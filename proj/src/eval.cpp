#include "freedl/model.hpp"

#include <bit>
#include <sstream>

#include "freedl/printer.hpp"

namespace freedl {

std::optional<int> Evaluator::term_value(int w, const Term& t) {
  if (t.is_name) {
    auto it = m_.individuals.find(t.name);
    if (it == m_.individuals.end()) return std::nullopt;
    int d = it->second[static_cast<size_t>(w)];
    if (d < 0) return std::nullopt;
    return d;
  }
  std::uint32_t ext = extension(w, t.body);
  if (std::popcount(ext) != 1) return std::nullopt;
  return std::countr_zero(ext);
}

std::uint32_t Evaluator::extension(int w, Concept c) {
  auto key = std::make_pair(c.id, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const std::uint32_t dom = m_.domain[static_cast<size_t>(w)];
  std::uint32_t result = 0;
  switch (c.kind()) {
    case Kind::Name: {
      auto e = m_.concept_ext.find(c.symbol());
      result = e == m_.concept_ext.end() ? 0 : (e->second[static_cast<size_t>(w)] & dom);
      break;
    }
    case Kind::NomInd: {
      auto v = term_value(w, Term::ind(c.symbol()));
      result = v && ((dom >> *v) & 1u) ? (1u << *v) : 0u;
      break;
    }
    case Kind::NomIota: {
      auto v = term_value(w, Term::iota(c.child()));
      result = v ? (1u << *v) : 0u;
      break;
    }
    case Kind::Not:
      result = dom & ~extension(w, c.child());
      break;
    case Kind::And:
      result = extension(w, c.left()) & extension(w, c.right());
      break;
    case Kind::ExistsRole: {
      std::uint32_t body = extension(w, c.child()) & dom;
      auto r = m_.role_ext.find(c.symbol());
      if (r != m_.role_ext.end()) {
        const auto& rows = r->second[static_cast<size_t>(w)];
        for (int d = 0; d < m_.pool_size; ++d) {
          if (!((dom >> d) & 1u)) continue;
          if (rows[static_cast<size_t>(d)] & body) result |= (1u << d);
        }
      }
      break;
    }
    case Kind::ExistsU:
      result = (extension(w, c.child()) & dom) ? dom : 0u;
      break;
    case Kind::ExistsNeq: {
      std::uint32_t body = extension(w, c.child()) & dom;
      int n = std::popcount(body);
      if (n >= 2) result = dom;
      else if (n == 1) result = dom & ~body;
      break;
    }
    case Kind::ExistsEq1:
      result = std::popcount(extension(w, c.child()) & dom) == 1 ? dom : 0u;
      break;
    case Kind::Dia: {
      int i = c.modality();
      std::uint32_t succs = m_.frame.succ[static_cast<size_t>(i - 1)][static_cast<size_t>(w)];
      for (int v = 0; v < m_.world_count(); ++v)
        if ((succs >> v) & 1u) result |= extension(v, c.child());
      result &= dom;
      break;
    }
  }
  memo_.emplace(key, result);
  return result;
}

std::uint32_t extension(const Interpretation& m, int w, Concept c) {
  Evaluator ev(m);
  return ev.extension(w, c);
}
std::optional<int> term_value(const Interpretation& m, int w, const Term& t) {
  Evaluator ev(m);
  return ev.term_value(w, t);
}
bool satisfied_at(const Interpretation& m, int w, Concept c) {
  return extension(m, w, c) != 0;
}
bool satisfies_ci(const Interpretation& m, const CI& ci) {
  Evaluator ev(m);
  for (int w = 0; w < m.world_count(); ++w) {
    std::uint32_t l = ev.extension(w, ci.lhs);
    std::uint32_t r = ev.extension(w, ci.rhs);
    if (l & ~r) return false;
  }
  return true;
}
bool satisfies_ontology(const Interpretation& m, const Ontology& o) {
  for (const CI& ci : o.cis)
    if (!satisfies_ci(m, ci)) return false;
  return true;
}
bool concept_satisfied(const Interpretation& m, Concept c) {
  Evaluator ev(m);
  for (int w = 0; w < m.world_count(); ++w)
    if (ev.extension(w, c)) return true;
  return false;
}

namespace {
bool relation_is_equivalence(const Frame& f, int i) {
  for (int w = 0; w < f.world_count; ++w) {
    if (!f.edge(i, w, w)) return false;
    for (int v = 0; v < f.world_count; ++v) {
      if (f.edge(i, w, v) != f.edge(i, v, w)) return false;
      if (!f.edge(i, w, v)) continue;
      for (int z = 0; z < f.world_count; ++z)
        if (f.edge(i, v, z) && !f.edge(i, w, z)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> transitive_closure_of_union(const Frame& f, int upto) {
  std::vector<std::uint32_t> r(static_cast<size_t>(f.world_count), 0);
  for (int i = 1; i <= upto; ++i)
    for (int w = 0; w < f.world_count; ++w) r[static_cast<size_t>(w)] |= f.succ[static_cast<size_t>(i - 1)][static_cast<size_t>(w)];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < f.world_count; ++w)
      for (int v = 0; v < f.world_count; ++v)
        if ((r[static_cast<size_t>(w)] >> v) & 1u) {
          std::uint32_t nw = r[static_cast<size_t>(w)] | r[static_cast<size_t>(v)];
          if (nw != r[static_cast<size_t>(w)]) {
            r[static_cast<size_t>(w)] = nw;
            changed = true;
          }
        }
  }
  return r;
}
}  // namespace

ModelProperties model_properties(const Interpretation& m) {
  ModelProperties p;
  p.is_total = true;
  for (const auto& [name, vals] : m.individuals) {
    (void)name;
    for (int v : vals)
      if (v < 0) p.is_total = false;
  }
  p.is_rda = true;
  for (const auto& [name, vals] : m.individuals) {
    (void)name;
    for (int i = 1; i <= m.frame.modality_count && p.is_rda; ++i)
      for (int w = 0; w < m.world_count() && p.is_rda; ++w) {
        if (vals[static_cast<size_t>(w)] < 0) continue;
        for (int v = 0; v < m.world_count(); ++v)
          if (m.frame.edge(i, w, v) && vals[static_cast<size_t>(v)] != vals[static_cast<size_t>(w)]) {
            p.is_rda = false;
            break;
          }
      }
  }
  p.is_constant_domain = true;
  for (int w = 1; w < m.world_count(); ++w)
    if (m.domain[static_cast<size_t>(w)] != m.domain[0]) p.is_constant_domain = false;

  p.in_s5 = true;
  for (int i = 1; i <= m.frame.modality_count; ++i)
    if (!relation_is_equivalence(m.frame, i)) p.in_s5 = false;

  if (m.frame.modality_count >= 2) {
    auto tc = transitive_closure_of_union(m.frame, m.frame.modality_count - 1);
    p.in_kstar = tc == m.frame.succ.back();
    p.in_kfstar = p.in_kstar;
    for (int w = 0; w < m.world_count(); ++w)
      if ((tc[static_cast<size_t>(w)] >> w) & 1u) p.in_kfstar = false;
  }
  return p;
}

std::string describe_interpretation(const Interpretation& m) {
  std::ostringstream os;
  os << "worlds: " << m.world_count() << "\n";
  for (int i = 1; i <= m.frame.modality_count; ++i) {
    os << "edges R" << i << ":";
    bool any = false;
    for (int w = 0; w < m.world_count(); ++w)
      for (int v = 0; v < m.world_count(); ++v)
        if (m.frame.edge(i, w, v)) {
          os << " (" << w << "," << v << ")";
          any = true;
        }
    if (!any) os << " (none)";
    os << "\n";
  }
  for (int w = 0; w < m.world_count(); ++w) {
    os << "world " << w << ": domain {";
    bool first = true;
    for (int d = 0; d < m.pool_size; ++d)
      if (m.in_domain(w, d)) {
        os << (first ? "" : ",") << "d" << d;
        first = false;
      }
    os << "}\n";
    for (const auto& [name, ext] : m.concept_ext) {
      os << "  " << name << " = {";
      bool f2 = true;
      for (int d = 0; d < m.pool_size; ++d)
        if ((ext[static_cast<size_t>(w)] >> d) & 1u) {
          os << (f2 ? "" : ",") << "d" << d;
          f2 = false;
        }
      os << "}\n";
    }
    for (const auto& [name, ext] : m.role_ext) {
      os << "  " << name << " = {";
      bool f2 = true;
      for (int d = 0; d < m.pool_size; ++d)
        for (int e = 0; e < m.pool_size; ++e)
          if ((ext[static_cast<size_t>(w)][static_cast<size_t>(d)] >> e) & 1u) {
            os << (f2 ? "" : ",") << "(d" << d << ",d" << e << ")";
            f2 = false;
          }
      os << "}\n";
    }
    for (const auto& [name, vals] : m.individuals) {
      os << "  " << name << " = ";
      if (vals[static_cast<size_t>(w)] < 0) os << "undef";
      else os << "d" << vals[static_cast<size_t>(w)];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace freedl
