#include "classify/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "core/error.hpp"

namespace rootsplit {

namespace {

using Triple = std::array<int, 3>;

struct TableCase {
  int caseNo;
  SplittingType first;
  SplittingType second;
};

// Exceptional triples, shared by both sequence shapes.
const std::map<Triple, TableCase>& exceptionalTriples() {
  static const std::map<Triple, TableCase> table{
      {{-2, -2, 0}, {2, SplittingType({-2, -1, -1}), SplittingType({-2, -2, 0})}},
      {{-2, -1, 0}, {3, SplittingType({-2, -1, 0}), SplittingType({-1, -1, -1})}},
      {{-2, 0, 0}, {4, SplittingType({-2, 0, 0}), SplittingType({-1, -1, 0})}},
  };
  return table;
}

void appendUnique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const std::string& s : from)
    if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
}

SplittingResult intersect(const std::vector<SplittingResult>& results) {
  SplittingResult out = results.front();
  for (std::size_t i = 1; i < results.size(); ++i) {
    std::vector<SplittingType> kept;
    for (const SplittingType& o : out.options)
      if (std::find(results[i].options.begin(), results[i].options.end(), o) != results[i].options.end())
        kept.push_back(o);
    out.options = kept;
    appendUnique(out.provenance, results[i].provenance);
    appendUnique(out.notes, results[i].notes);
  }
  if (out.options.empty())
    throw Error(ErrorCode::EmptyIntersection, "the short exact sequences give disjoint root candidates");
  if (results.size() > 1) out.provenance.push_back("Intersection");
  out.normalize();
  return out;
}

void checkRange(const SplittingResult& r, int lo, bool inclusiveLo, const std::string& name) {
  for (const SplittingType& o : r.options)
    for (int x : o.roots())
      if (x > 0 || x < lo || (!inclusiveLo && x == lo))
        throw Error(ErrorCode::RootOutOfProvenRange,
                    "roots " + o.canonical() + " leave the proven window of " + name);
}

SplittingResult characterResult(int root) {
  SplittingResult r;
  r.options = {SplittingType({root})};
  r.provenance = {"Character"};
  r.normalize();
  return r;
}

SplittingResult piece(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() == 1) return characterResult(characterRoot(rep, tol));
  return rootsDim2(rep, tol);
}

SplittingResult combineSummands(const std::vector<SplittingResult>& parts) {
  SplittingResult out;
  out.options = {SplittingType()};
  for (const SplittingResult& p : parts) {
    std::vector<SplittingType> next;
    for (const SplittingType& a : out.options)
      for (const SplittingType& b : p.options) next.push_back(a + b);
    out.options = next;
    appendUnique(out.provenance, p.provenance);
    appendUnique(out.notes, p.notes);
  }
  out.provenance.push_back("DirectSum");
  out.normalize();
  return out;
}

// Union of table outcomes over every candidate of the two pieces.
SplittingResult sequenceOutcome(const SplittingResult& sub, const SplittingResult& quotient) {
  SplittingResult out;
  for (const SplittingType& s : sub.options)
    for (const SplittingType& q : quotient.options) {
      SplittingResult t = reducibleTable(s, q);
      out.options.insert(out.options.end(), t.options.begin(), t.options.end());
      appendUnique(out.provenance, t.provenance);
      appendUnique(out.notes, t.notes);
    }
  appendUnique(out.notes, sub.notes);
  appendUnique(out.notes, quotient.notes);
  if (sub.options.size() * quotient.options.size() > 1) out.notes.push_back("union over ambiguous piece candidates");
  out.normalize();
  return out;
}

SplittingResult dim2FromComposition(const MonodromyRep& rep, const CompositionData& comp, int c1,
                                    const Tolerances& tol) {
  SplittingResult result;
  if (comp.kind == CompositionKind::Irreducible) {
    const int hi = c1 >= 0 ? (c1 + 1) / 2 : -((-c1) / 2);  // ceil(c1 / 2)
    result.options = {SplittingType({hi, c1 - hi})};
    result.provenance = {"IrreducibleDim2.parity"};
    result.notes.push_back("derived: parity rule for irreducible rank 2");
    result.normalize();
  } else if (comp.kind == CompositionKind::Decomposable) {
    result = combineSummands({piece(comp.summands[0], tol), piece(comp.summands[1], tol)});
  } else {
    std::vector<SplittingResult> perSequence;
    for (const ExactSequence& seq : comp.sequences) {
      const SplittingType sub({characterRoot(seq.sub, tol)});
      const SplittingType quo({characterRoot(seq.quotient, tol)});
      SplittingResult r;
      if (extSplits(sub, quo)) {
        r.options = {sub + quo};
        r.provenance = {"ReducibleDim2.split"};
      } else {
        r.options = {SplittingType({-2, 0}), SplittingType({-1, -1})};
        r.provenance = {"ReducibleDim2.nonsplit"};
        r.notes.push_back("non-split range: deciding between the candidates needs the extension class");
      }
      r.normalize();
      perSequence.push_back(r);
    }
    result = intersect(perSequence);
  }
  (void)rep;
  checkRange(result, -2, true, "rank 2 (0 >= xi >= -2)");
  return result;
}

}  // namespace

int checkedCharacterRoot(int c1) {
  if (c1 > 0 || c1 < -2)
    throw Error(ErrorCode::RootOutOfProvenRange, "character root " + std::to_string(c1) + " is outside {0,-1,-2}");
  return c1;
}

int characterRoot(const MonodromyRep& chi, const Tolerances& tol) {
  if (chi.n() != 1) throw Error(ErrorCode::DimensionError, "characterRoot needs a 1-dimensional representation");
  return checkedCharacterRoot(chernClass(chi, tol).c1);
}

bool extSplits(const SplittingType& subRoots, const SplittingType& quotientRoots) {
  for (int q : quotientRoots.roots())
    for (int s : subRoots.roots())
      if (q - s >= 2) return false;
  return true;
}

SplittingResult reducibleTable(const SplittingType& sub, const SplittingType& quotient) {
  Triple key;
  std::string shape;
  if (sub.dim() == 2 && quotient.dim() == 1) {
    key = {sub.min(), sub.max(), quotient.max()};
    shape = "Reducible1";
  } else if (sub.dim() == 1 && quotient.dim() == 2) {
    key = {sub.max(), quotient.min(), quotient.max()};
    shape = "Reducible2";
  } else {
    throw Error(ErrorCode::DimensionError, "reducibleTable expects ranks (2,1) or (1,2)");
  }
  SplittingResult r;
  const auto& table = exceptionalTriples();
  if (auto it = table.find(key); it != table.end()) {
    r.options = {it->second.first, it->second.second};
    r.provenance = {shape + ".case" + std::to_string(it->second.caseNo)};
    r.notes.push_back("two candidates proven; which one occurs is not decided by monodromy arithmetic");
  } else {
    if (!extSplits(sub, quotient))
      throw Error(ErrorCode::RootOutOfProvenRange,
                  "triple outside the proven table: sub " + sub.canonical() + ", quotient " + quotient.canonical());
    r.options = {sub + quotient};
    r.provenance = {shape + ".case1"};
  }
  r.normalize();
  return r;
}

SplittingResult rootsDim2(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() != 2) throw Error(ErrorCode::DimensionError, "rootsDim2 needs n = 2");
  return dim2FromComposition(rep, analyze(rep, tol), chernClass(rep, tol).c1, tol);
}

SplittingResult rootsDim3Reducible(const MonodromyRep& rep, const CompositionData& comp, const Tolerances& tol) {
  if (rep.n() != 3) throw Error(ErrorCode::DimensionError, "rootsDim3Reducible needs n = 3");
  if (comp.kind == CompositionKind::Irreducible)
    throw Error(ErrorCode::InvalidArgument, "rootsDim3Reducible needs a reducible representation");
  SplittingResult result;
  if (comp.kind == CompositionKind::Decomposable) {
    result = combineSummands({piece(comp.summands[0], tol), piece(comp.summands[1], tol)});
  } else {
    std::vector<SplittingResult> perSequence;
    for (const ExactSequence& seq : comp.sequences)
      perSequence.push_back(sequenceOutcome(piece(seq.sub, tol), piece(seq.quotient, tol)));
    result = intersect(perSequence);
  }
  checkRange(result, -3, false, "reducible rank 3 (0 >= xi > -3)");
  const SplittingType excluded({0, -1, -3});
  for (const SplittingType& o : result.options)
    if (o == excluded) throw Error(ErrorCode::RootOutOfProvenRange, "(0,-1,-3) cannot occur for reducible rank 3");
  return result;
}

SplittingResult rootsDim3Irreducible(int zeta) {
  SplittingResult r;
  const int residue = ((zeta % 3) + 3) % 3;
  if (residue == 0) {
    const int x = zeta / 3;
    r.options = {SplittingType({x, x, x}), SplittingType({x + 1, x, x - 1})};
    r.kappa = {0, 3};
    r.provenance = {"IrreducibleThm.zeta0"};
  } else if (residue == 1) {
    r.options = {SplittingType({(zeta + 2) / 3, (zeta - 1) / 3, (zeta - 1) / 3})};
    r.kappa = {2};
    r.provenance = {"IrreducibleThm.zeta1"};
  } else {
    r.options = {SplittingType({(zeta + 1) / 3, (zeta + 1) / 3, (zeta - 2) / 3})};
    r.kappa = {1};
    r.provenance = {"IrreducibleThm.zeta2"};
  }
  for (std::size_t i = 0; i < r.options.size(); ++i)
    r.notes.push_back(r.options[i].canonical() + ": xi_min = " + std::to_string(-r.options[i].max()) +
                      ", kappa = " + std::to_string(r.kappa[i]));
  r.normalize();
  return r;
}

SplittingResult rootsDim3Irreducible(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() != 3) throw Error(ErrorCode::DimensionError, "rootsDim3Irreducible needs n = 3");
  return rootsDim3Irreducible(chernClass(rep, tol).c1);
}

CandidateTree candidateTree(int m, int d, std::optional<int> c1) {
  if (m < 2 || d < 1) throw Error(ErrorCode::InvalidArgument, "candidateTree needs m >= 2 and d >= 1");
  CandidateTree tree;
  tree.proven = m == 3 && d <= 3;
  std::vector<std::vector<int>> level{{0}};
  for (int depth = 1; depth < d; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& path : level)
      for (int step = 0; step <= m - 2; ++step) {
        auto child = path;
        child.push_back(path.back() - step);
        next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  tree.patterns = std::move(level);
  if (c1) {
    std::set<SplittingType> seen;
    for (const auto& p : tree.patterns) {
      int offsets = 0;
      for (int o : p) offsets += o;
      const int rest = *c1 - offsets;
      if (rest % d != 0) continue;
      const int x = rest / d;
      std::vector<int> roots;
      for (int o : p) roots.push_back(x + o);
      SplittingType t(roots);
      if (seen.insert(t).second) tree.concrete.push_back(t);
    }
  }
  return tree;
}

Classification classify(const MonodromyRep& rep, const Tolerances& tol) {
  Classification c;
  c.chern = chernClass(rep, tol);
  c.bounds = chernBoundCheck(rep, c.chern, tol, true);
  const int c1 = c.chern.c1;
  switch (rep.n()) {
    case 1:
      c.result = characterResult(checkedCharacterRoot(c1));
      break;
    case 2:
      c.composition = analyze(rep, tol);
      c.result = dim2FromComposition(rep, c.composition, c1, tol);
      break;
    default:
      c.composition = analyze(rep, tol);
      if (c.composition.kind == CompositionKind::Irreducible)
        c.result = rootsDim3Irreducible(c1);
      else
        c.result = rootsDim3Reducible(rep, c.composition, tol);
      break;
  }
  for (const SplittingType& o : c.result.options)
    if (o.sum() != c1)
      throw Error(ErrorCode::Internal, "sum rule failed: roots " + o.canonical() + " against c1 = " +
                                           std::to_string(c1));
  if (rep.n() == 3) {
    for (const BoundReport& b : c.bounds)
      if (b.conjectural && !b.holds) c.result.notes.push_back("c1 lies outside the conjectured window " + b.statement);
  }
  return c;
}

}  // namespace rootsplit
