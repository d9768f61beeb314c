#include "orlicz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive_finite(double mass, const std::string& id) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("mass of '" + id + "' must be positive and finite");
  }
}

}  // namespace

MeasureSpace MeasureSpace::from_parts(std::vector<Atom> atoms, std::vector<Cell> nonatomic) {
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    require_positive_finite(a.mass, a.id);
    if (!seen.insert(a.id).second) throw std::invalid_argument("duplicate id '" + a.id + "'");
  }
  for (const auto& c : nonatomic) {
    require_positive_finite(c.mass, c.id);
    if (!seen.insert(c.id).second) throw std::invalid_argument("duplicate id '" + c.id + "'");
  }
  MeasureSpace s;
  s.atoms_ = std::move(atoms);
  s.cells_ = std::move(nonatomic);
  for (const auto& a : s.atoms_) s.mass_[a.id] = a.mass;
  for (const auto& c : s.cells_) s.mass_[c.id] = c.mass;
  return s;
}

MeasureSpace MeasureSpace::parametric(Formula mass_formula, std::size_t truncation,
                                      std::vector<Cell> nonatomic, std::string prefix) {
  std::vector<Atom> atoms;
  atoms.reserve(truncation);
  for (std::size_t n = 1; n <= truncation; ++n) {
    const double mass = mass_formula(static_cast<double>(n));
    atoms.push_back({prefix + std::to_string(n), mass});
  }
  MeasureSpace s = from_parts(std::move(atoms), std::move(nonatomic));
  s.parametric_ = ParametricAtoms{std::move(mass_formula), truncation, std::move(prefix)};
  return s;
}

std::size_t MeasureSpace::truncation() const {
  return parametric_ ? parametric_->truncation : atoms_.size();
}

MeasureSpace MeasureSpace::rematerialized(std::size_t n) const {
  if (!parametric_) throw std::logic_error("rematerialized: space is not parametric");
  return parametric(parametric_->mass_formula, n, cells_, parametric_->prefix);
}

bool MeasureSpace::contains(const std::string& id) const { return mass_.count(id) != 0; }

bool MeasureSpace::is_atom(const std::string& id) const {
  return std::any_of(atoms_.begin(), atoms_.end(), [&](const Atom& a) { return a.id == id; });
}

double MeasureSpace::mass_of(const std::string& id) const {
  auto it = mass_.find(id);
  if (it == mass_.end()) throw std::out_of_range("no such id '" + id + "'");
  return it->second;
}

double MeasureSpace::total_mass() const {
  double s = 0.0, comp = 0.0;
  for (const auto& a : atoms_) {
    const double y = a.mass - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s + nonatomic_mass();
}

double MeasureSpace::nonatomic_mass() const {
  double s = 0.0, comp = 0.0;
  for (const auto& c : cells_) {
    const double y = c.mass - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

MeasureSpace MeasureSpace::refine(const std::string& cell_id) const {
  if (is_atom(cell_id)) {
    throw std::invalid_argument("refine: '" + cell_id + "' is an atom and cannot be split");
  }
  MeasureSpace out = *this;
  for (auto it = out.cells_.begin(); it != out.cells_.end(); ++it) {
    if (it->id == cell_id) {
      const Cell parent = *it;
      it = out.cells_.erase(it);
      const double half = parent.mass / 2.0;
      out.cells_.insert(it, {Cell{parent.id + ".0", half, parent.depth + 1},
                             Cell{parent.id + ".1", half, parent.depth + 1}});
      return out;
    }
  }
  throw std::out_of_range("refine: no such cell '" + cell_id + "'");
}

std::vector<std::string> MeasureSpace::ids() const {
  std::vector<std::string> out;
  out.reserve(atoms_.size() + cells_.size());
  for (const auto& a : atoms_) out.push_back(a.id);
  for (const auto& c : cells_) out.push_back(c.id);
  return out;
}

SimpleFunction SimpleFunction::constant(const MeasureSpace& space, double v) {
  SimpleFunction f;
  for (const auto& id : space.ids()) f.values_[id] = v;
  return f;
}

SimpleFunction SimpleFunction::indicator(const std::vector<std::string>& ids, double v) {
  SimpleFunction f;
  for (const auto& id : ids) f.values_[id] = v;
  return f;
}

SimpleFunction SimpleFunction::on_atoms(const MeasureSpace& space, const Formula& f,
                                        double cell_value) {
  SimpleFunction out;
  std::size_t n = 0;
  for (const auto& a : space.atoms()) {
    ++n;
    out.values_[a.id] = f(static_cast<double>(n));
  }
  for (const auto& c : space.cells()) out.values_[c.id] = cell_value;
  return out;
}

double SimpleFunction::at(const std::string& id) const {
  auto it = values_.find(id);
  return it == values_.end() ? 0.0 : it->second;
}

void SimpleFunction::set(const std::string& id, double v) { values_[id] = v; }

SimpleFunction SimpleFunction::abs() const {
  SimpleFunction out;
  for (const auto& [id, v] : values_) out.values_[id] = std::abs(v);
  return out;
}

SimpleFunction SimpleFunction::compose(const YoungFunction& phi) const {
  SimpleFunction out;
  for (const auto& [id, v] : values_) out.values_[id] = phi(v).value();
  return out;
}

SimpleFunction SimpleFunction::scaled(double c) const {
  SimpleFunction out;
  for (const auto& [id, v] : values_) out.values_[id] = c * v;
  return out;
}

SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b) {
  SimpleFunction out = a;
  for (const auto& [id, v] : b.values_) out.values_[id] += v;
  return out;
}

SimpleFunction operator*(const SimpleFunction& a, const SimpleFunction& b) {
  SimpleFunction out;
  for (const auto& [id, v] : a.values_) out.values_[id] = v * b.at(id);
  return out;
}

double SimpleFunction::max_abs() const {
  double m = 0.0;
  for (const auto& [id, v] : values_) m = std::max(m, std::abs(v));
  return m;
}

double SimpleFunction::support_threshold() const { return 1e-12 * std::max(1.0, max_abs()); }

std::vector<std::string> SimpleFunction::support(const MeasureSpace& space) const {
  const double eps = support_threshold();
  std::vector<std::string> out;
  for (const auto& id : space.ids()) {
    if (std::abs(at(id)) > eps) out.push_back(id);
  }
  return out;
}

ExtReal integrate(const SimpleFunction& f, const MeasureSpace& space) {
  double s = 0.0, comp = 0.0;
  for (const auto& id : space.ids()) {
    const double v = f.at(id);
    if (v == 0.0) continue;
    if (std::isinf(v)) return ExtReal::inf();
    const double y = v * space.mass_of(id) - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return ExtReal(s);
}

SubSigmaAlgebra SubSigmaAlgebra::identity(const MeasureSpace& space) {
  std::map<std::string, std::vector<std::string>> blocks;
  for (const auto& id : space.ids()) blocks[id] = {id};
  return from_blocks(std::move(blocks), space);
}

SubSigmaAlgebra SubSigmaAlgebra::single_block(const MeasureSpace& space, std::string name) {
  std::map<std::string, std::vector<std::string>> blocks;
  blocks[std::move(name)] = space.ids();
  return from_blocks(std::move(blocks), space);
}

SubSigmaAlgebra SubSigmaAlgebra::from_blocks(
    std::map<std::string, std::vector<std::string>> blocks, const MeasureSpace& space) {
  SubSigmaAlgebra alg;
  for (const auto& [name, members] : blocks) {
    if (members.empty()) throw std::invalid_argument("empty block '" + name + "'");
    for (const auto& id : members) {
      if (!space.contains(id)) {
        throw std::invalid_argument("block '" + name + "' references unknown id '" + id + "'");
      }
      if (!alg.owner_.emplace(id, name).second) {
        throw std::invalid_argument("id '" + id + "' appears in two blocks");
      }
    }
  }
  for (const auto& id : space.ids()) {
    if (!alg.owner_.count(id)) {
      throw std::invalid_argument("id '" + id + "' is not covered by any block");
    }
  }
  alg.blocks_ = std::move(blocks);
  return alg;
}

std::string SubSigmaAlgebra::block_of(const std::string& id) const {
  std::string key = id;
  for (;;) {
    auto it = owner_.find(key);
    if (it != owner_.end()) return it->second;
    const auto dot = key.rfind('.');
    if (dot == std::string::npos) {
      throw std::out_of_range("id '" + id + "' belongs to no block");
    }
    key.erase(dot);
  }
}

std::vector<std::string> SubSigmaAlgebra::members(const MeasureSpace& space,
                                                  const std::string& block) const {
  std::vector<std::string> out;
  for (const auto& id : space.ids()) {
    if (block_of(id) == block) out.push_back(id);
  }
  return out;
}

double SubSigmaAlgebra::block_mass(const MeasureSpace& space, const std::string& block) const {
  double s = 0.0;
  for (const auto& id : members(space, block)) s += space.mass_of(id);
  return s;
}

bool SubSigmaAlgebra::block_is_nonatomic(const MeasureSpace& space,
                                         const std::string& block) const {
  for (const auto& id : members(space, block)) {
    if (space.is_atom(id)) return false;
  }
  return true;
}

CarveResult carve_subsets(const MeasureSpace& space, const std::vector<std::string>& parent_region,
                          const std::vector<double>& targets, double rel_tol, int max_depth) {
  double region_mass = 0.0;
  for (const auto& id : parent_region) {
    if (space.is_atom(id)) {
      throw std::invalid_argument("carve_subsets: region contains atom '" + id + "'");
    }
    region_mass += space.mass_of(id);
  }
  double total_target = 0.0;
  for (double t : targets) {
    if (!(t > 0.0)) throw std::invalid_argument("carve_subsets: targets must be positive");
    total_target += t;
  }
  if (total_target > region_mass * (1.0 + 1e-12)) {
    throw std::invalid_argument("carve_subsets: targets exceed region mass");
  }

  CarveResult res;
  // Splits are performed on a local cell list and the refined space is
  // assembled once at the end; routing every split through refine() would be
  // quadratic in the number of cells.
  std::map<std::string, Cell> cells;
  for (const auto& c : space.cells()) cells[c.id] = c;

  std::vector<Cell> free;  // free list; used entries are removed
  for (const auto& id : parent_region) free.push_back(cells.at(id));

  for (double target : targets) {
    std::vector<std::string> set;
    double acc = 0.0;
    while (target - acc > rel_tol * target) {
      const double want = target - acc;
      // largest free cell not exceeding the remainder
      std::size_t best = free.size();
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (free[i].mass <= want * (1.0 + 1e-15) &&
            (best == free.size() || free[i].mass > free[best].mass)) {
          best = i;
        }
      }
      if (best != free.size()) {
        acc += free[best].mass;
        set.push_back(free[best].id);
        free.erase(free.begin() + best);
        continue;
      }
      // everything is too big: split the smallest free cell
      std::size_t smallest = 0;
      for (std::size_t i = 1; i < free.size(); ++i) {
        if (free[i].mass < free[smallest].mass) smallest = i;
      }
      const Cell parent = free[smallest];
      if (parent.depth >= max_depth) {
        throw std::runtime_error("carve_subsets: depth limit " + std::to_string(max_depth) +
                                 " exceeded before reaching target");
      }
      free.erase(free.begin() + smallest);
      cells.erase(parent.id);
      const Cell left{parent.id + ".0", parent.mass / 2.0, parent.depth + 1};
      const Cell right{parent.id + ".1", parent.mass / 2.0, parent.depth + 1};
      cells[left.id] = left;
      cells[right.id] = right;
      free.push_back(left);
      free.push_back(right);
    }
    res.achieved_masses.push_back(acc);
    res.sets.push_back(std::move(set));
  }
  std::vector<Cell> cell_list;
  cell_list.reserve(cells.size());
  for (const auto& [id, c] : cells) cell_list.push_back(c);
  res.space = MeasureSpace::from_parts(space.atoms(), std::move(cell_list));
  return res;
}

}  // namespace orlicz
