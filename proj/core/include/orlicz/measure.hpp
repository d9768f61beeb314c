#ifndef ORLICZ_MEASURE_HPP
#define ORLICZ_MEASURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/extended_real.hpp"
#include "orlicz/formula.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct Atom {
  std::string id;
  double mass = 0.0;
};

// Dyadic grid cell of the non-atomic part. Subdividing replaces a cell by two
// children of exactly half the mass.
struct Cell {
  std::string id;
  double mass = 0.0;
  int depth = 0;
};

struct ParametricAtoms {
  Formula mass_formula;
  std::size_t truncation = 0;
  std::string prefix = "A";
};

// Finite representation of a sigma-finite measure space: a list of atoms plus
// a refinable cell grid standing in for the non-atomic part. Immutable;
// refine/rematerialize return new spaces.
class MeasureSpace {
 public:
  MeasureSpace() = default;
  static MeasureSpace from_parts(std::vector<Atom> atoms, std::vector<Cell> nonatomic);
  static MeasureSpace parametric(Formula mass_formula, std::size_t truncation,
                                 std::vector<Cell> nonatomic = {}, std::string prefix = "A");

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool is_parametric() const { return parametric_.has_value(); }
  std::size_t truncation() const;
  // Same atom family truncated at n instead; non-atomic cells carry over.
  MeasureSpace rematerialized(std::size_t n) const;

  bool contains(const std::string& id) const;
  bool is_atom(const std::string& id) const;
  double mass_of(const std::string& id) const;
  double total_mass() const;
  double nonatomic_mass() const;

  // Replace a non-atomic cell by two children of half mass. Throws on atom ids:
  // atoms are indivisible by definition.
  MeasureSpace refine(const std::string& cell_id) const;

  // Deterministic iteration order over all ids: atoms first, then cells.
  std::vector<std::string> ids() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Cell> cells_;
  std::map<std::string, double> mass_;  // id -> mass, atoms and cells
  std::optional<ParametricAtoms> parametric_;
};

// Cell-indexed real values; ids absent from the map are 0. Values may be +inf
// (a composed Young function past its jump); signs are kept, criteria take
// moduli where the analysis requires them.
class SimpleFunction {
 public:
  SimpleFunction() = default;
  static SimpleFunction constant(const MeasureSpace& space, double v);
  static SimpleFunction indicator(const std::vector<std::string>& ids, double v = 1.0);
  // f(A_n) = formula(n) on parametric atoms, `cell_value` on non-atomic cells.
  static SimpleFunction on_atoms(const MeasureSpace& space, const Formula& f,
                                 double cell_value = 0.0);

  double at(const std::string& id) const;
  void set(const std::string& id, double v);
  const std::map<std::string, double>& values() const { return values_; }

  SimpleFunction abs() const;
  SimpleFunction compose(const YoungFunction& phi) const;  // id -> Phi(f(id))
  SimpleFunction scaled(double c) const;

  friend SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b);
  friend SimpleFunction operator*(const SimpleFunction& a, const SimpleFunction& b);

  double max_abs() const;
  // Support threshold: 1e-12 * max(1, max |value|). "= 0 a.e." is a numeric
  // decision and this is the single place it is made.
  double support_threshold() const;
  std::vector<std::string> support(const MeasureSpace& space) const;

 private:
  std::map<std::string, double> values_;
};

ExtReal integrate(const SimpleFunction& f, const MeasureSpace& space);

// Partition of the space's ids into named blocks, defining the sub-sigma-
// algebra. Cells refined later still resolve: a child id "c.0.1" belongs to
// the block of its ancestor "c".
class SubSigmaAlgebra {
 public:
  SubSigmaAlgebra() = default;
  static SubSigmaAlgebra identity(const MeasureSpace& space);
  static SubSigmaAlgebra single_block(const MeasureSpace& space, std::string name = "all");
  static SubSigmaAlgebra from_blocks(std::map<std::string, std::vector<std::string>> blocks,
                                     const MeasureSpace& space);

  const std::map<std::string, std::vector<std::string>>& blocks() const { return blocks_; }
  std::string block_of(const std::string& id) const;
  double block_mass(const MeasureSpace& space, const std::string& block) const;
  // Ids of the space belonging to the block (follows refinement prefixes).
  std::vector<std::string> members(const MeasureSpace& space, const std::string& block) const;
  bool block_is_nonatomic(const MeasureSpace& space, const std::string& block) const;

 private:
  std::map<std::string, std::vector<std::string>> blocks_;
  std::map<std::string, std::string> owner_;  // member id -> block
};

struct CarveResult {
  MeasureSpace space;  // refined
  std::vector<std::vector<std::string>> sets;
  std::vector<double> achieved_masses;
};

// Greedily refines cells of `parent_region` until pairwise-disjoint unions
// with the target masses exist (relative tolerance on each target). Throws
// when targets exceed the region mass or the depth limit is hit.
CarveResult carve_subsets(const MeasureSpace& space, const std::vector<std::string>& parent_region,
                          const std::vector<double>& targets, double rel_tol = 1e-9,
                          int max_depth = 60);

}  // namespace orlicz

#endif
