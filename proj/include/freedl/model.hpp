// freedl/model.hpp — frames, partial interpretations, frame classes, model
// bounds, and evaluation of concepts on finite models.
//
// Worlds and domain elements are small integers; extensions are bitmasks
// (word-level sets).  An interpretation may have at most 31 worlds and 8
// domain elements, far above anything the bounded oracle explores.

#ifndef FREEDL_MODEL_HPP
#define FREEDL_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freedl/ast.hpp"

namespace freedl {

struct Frame {
  int world_count = 1;
  int modality_count = 1;  // relations stored; includes a derived closure relation
  // succ[i][w] = bitmask of worlds v with w R_{i+1} v.
  std::vector<std::vector<std::uint32_t>> succ;

  Frame() = default;
  Frame(int worlds, int modalities)
      : world_count(worlds),
        modality_count(modalities),
        succ(static_cast<size_t>(modalities),
             std::vector<std::uint32_t>(static_cast<size_t>(worlds), 0)) {}
  bool edge(int i, int w, int v) const {  // i is 1-based
    return (succ[static_cast<size_t>(i - 1)][static_cast<size_t>(w)] >> v) & 1u;
  }
  void add_edge(int i, int w, int v) {
    succ[static_cast<size_t>(i - 1)][static_cast<size_t>(w)] |= (1u << v);
  }
};

enum class FrameClassTag { Kn, S5n, KStarN, KfStarN, LTLFinite, LTLInfinitePrefix };

// For KStarN/KfStarN the frame carries base_modalities relations plus one
// derived transitive-closure relation addressed as modality base+1.  The LTL
// classes have two fixed relations: 1 = successor, 2 = strict order.
struct FrameClass {
  FrameClassTag tag = FrameClassTag::Kn;
  int base_modalities = 1;
  int fixed_ltl_length = -1;  // LTL classes: exact flow length, or -1 = any within bounds

  static FrameClass kn(int n) { return {FrameClassTag::Kn, n, -1}; }
  static FrameClass s5n(int n) { return {FrameClassTag::S5n, n, -1}; }
  static FrameClass kstar(int n) { return {FrameClassTag::KStarN, n, -1}; }
  static FrameClass kfstar(int n) { return {FrameClassTag::KfStarN, n, -1}; }
  static FrameClass ltl_finite(int len = -1) { return {FrameClassTag::LTLFinite, 2, len}; }
  static FrameClass ltl_infinite_prefix(int len) {
    return {FrameClassTag::LTLInfinitePrefix, 2, len};
  }
  int relation_count() const {
    switch (tag) {
      case FrameClassTag::KStarN:
      case FrameClassTag::KfStarN:
        return base_modalities + 1;
      case FrameClassTag::LTLFinite:
      case FrameClassTag::LTLInfinitePrefix:
        return 2;
      default:
        return base_modalities;
    }
  }
};

enum class DomainMode { Constant, Expanding };
enum class DesignationMode { Partial, Total };

struct ModelBounds {
  int max_worlds = 3;
  int max_domain = 3;
  FrameClass frame_class = FrameClass::kn(1);
  DomainMode domain_mode = DomainMode::Constant;
  DesignationMode designation_mode = DesignationMode::Partial;
  bool rda = false;
};

struct Interpretation {
  Frame frame;
  int pool_size = 1;  // elements are 0..pool_size-1 (at most 31)
  std::vector<std::uint32_t> domain;  // per world; constant domains: all equal
  std::map<std::string, std::vector<std::uint32_t>> concept_ext;
  // role_ext[r][w][d] = bitmask of elements e with (d, e) in the extension.
  std::map<std::string, std::vector<std::vector<std::uint32_t>>> role_ext;
  std::map<std::string, std::vector<int>> individuals;  // element or -1 (undefined)

  int world_count() const { return frame.world_count; }
  bool in_domain(int w, int d) const { return (domain[static_cast<size_t>(w)] >> d) & 1u; }
  bool role_edge(const std::string& r, int w, int d, int e) const {
    auto it = role_ext.find(r);
    return it != role_ext.end() &&
           ((it->second[static_cast<size_t>(w)][static_cast<size_t>(d)] >> e) & 1u);
  }
};

// Concept evaluation with memoization over (concept, world).
class Evaluator {
 public:
  explicit Evaluator(const Interpretation& m) : m_(m) {}
  std::uint32_t extension(int w, Concept c);
  std::optional<int> term_value(int w, const Term& t);

 private:
  const Interpretation& m_;
  std::map<std::pair<ConceptId, int>, std::uint32_t> memo_;
};

std::uint32_t extension(const Interpretation& m, int w, Concept c);
std::optional<int> term_value(const Interpretation& m, int w, const Term& t);
bool satisfied_at(const Interpretation& m, int w, Concept c);
bool satisfies_ci(const Interpretation& m, const CI& ci);
bool satisfies_ontology(const Interpretation& m, const Ontology& o);
// Satisfied at some world (the §2 notion of concept satisfaction).
bool concept_satisfied(const Interpretation& m, Concept c);

struct ModelProperties {
  bool is_total = false;
  bool is_rda = false;
  bool is_constant_domain = false;
  bool in_s5 = false;
  bool in_kfstar = false;  // last relation = irreflexive transitive closure of the others
  bool in_kstar = false;   // last relation = transitive closure of the others
};
ModelProperties model_properties(const Interpretation& m);

// Human-readable multi-line report: worlds, edges per modality, per-world
// domain, extensions and the individual map (with explicit "undef").
std::string describe_interpretation(const Interpretation& m);

}  // namespace freedl

#endif  // FREEDL_MODEL_HPP
