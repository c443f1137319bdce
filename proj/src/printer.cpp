#include "freedl/printer.hpp"

#include <sstream>

namespace freedl {

namespace {
void print_rec(Concept c, std::ostream& os) {
  if (is_bot(c)) {
    os << "bot";
    return;
  }
  if (is_top(c)) {
    os << "top";
    return;
  }
  if (auto bx = match_box(c)) {
    os << "box" << bx->first << " ";
    print_rec(bx->second, os);
    return;
  }
  if (auto fa = match_forall(c)) {
    os << "only " << fa->first << ". ";
    print_rec(fa->second, os);
    return;
  }
  if (auto fu = match_forall_u(c)) {
    os << "only u. ";
    print_rec(*fu, os);
    return;
  }
  if (auto orr = match_or(c)) {
    os << "(";
    print_rec(orr->first, os);
    os << " or ";
    print_rec(orr->second, os);
    os << ")";
    return;
  }
  if (auto imp = match_implies(c)) {
    os << "(";
    print_rec(imp->first, os);
    os << " => ";
    print_rec(imp->second, os);
    os << ")";
    return;
  }
  if (auto iff = match_iff(c)) {
    os << "(";
    print_rec(iff->first, os);
    os << " <=> ";
    print_rec(iff->second, os);
    os << ")";
    return;
  }
  switch (c.kind()) {
    case Kind::Name:
      os << c.symbol();
      return;
    case Kind::NomInd:
      os << "{" << c.symbol() << "}";
      return;
    case Kind::NomIota:
      os << "{iota ";
      print_rec(c.child(), os);
      os << "}";
      return;
    case Kind::Not:
      os << "not ";
      print_rec(c.child(), os);
      return;
    case Kind::And:
      os << "(";
      print_rec(c.left(), os);
      os << " and ";
      print_rec(c.right(), os);
      os << ")";
      return;
    case Kind::ExistsRole:
      os << "some " << c.symbol() << ". ";
      print_rec(c.child(), os);
      return;
    case Kind::ExistsU:
      os << "some u. ";
      print_rec(c.child(), os);
      return;
    case Kind::ExistsNeq:
      os << "some!= u. ";
      print_rec(c.child(), os);
      return;
    case Kind::ExistsEq1:
      os << "some=1 u. ";
      print_rec(c.child(), os);
      return;
    case Kind::Dia:
      os << "dia" << c.modality() << " ";
      print_rec(c.child(), os);
      return;
  }
}
}  // namespace

std::string print_concept(Concept c) {
  std::ostringstream os;
  print_rec(c, os);
  return os.str();
}

std::string print_ci(const CI& ci) {
  return print_concept(ci.lhs) + " [= " + print_concept(ci.rhs);
}

std::string print_ontology(const Ontology& o) {
  std::ostringstream os;
  for (const CI& ci : o.cis) os << print_ci(ci) << "\n";
  return os.str();
}

}  // namespace freedl
