#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsi/diffop.hpp"

namespace lsi {

// Generator name: family letter(s), optional rational index, optional
// component superscripts. Examples: X_1, Y_-1/2, Y_0^2, R_0^12, M_0, N, D,
// V+, Theta, h_1.
struct Label {
  std::string family;
  Rat index{0};
  bool indexed = false;
  std::vector<int> comp;

  static Label X(const Rat& n) { return {"X", n, true, {}}; }
  static Label Y(const Rat& m) { return {"Y", m, true, {}}; }
  static Label Y(const Rat& m, int j) { return {"Y", m, true, {j}}; }
  static Label M(const Rat& n) { return {"M", n, true, {}}; }
  static Label R(int j, int k) { return {"R", 0, true, {j, k}}; }
  static Label N() { return {"N", 0, false, {}}; }
  static Label D() { return {"D", 0, false, {}}; }
  static Label Vplus() { return {"V+", 0, false, {}}; }
  static Label Theta() { return {"Theta", 0, false, {}}; }
  static Label h(int j) { return {"h", j, true, {}}; }
  static Label KX() { return {"KX", 0, false, {}}; }
  static Label KY() { return {"KY", 0, false, {}}; }

  std::string str() const {
    std::string s = family;
    if (indexed) s += "_" + rat_str(index);
    if (!comp.empty()) {
      s += "^";
      for (int c : comp) s += std::to_string(c);
    }
    return s;
  }

  friend bool operator<(const Label& a, const Label& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.index != b.index) return a.index < b.index;
    return a.comp < b.comp;
  }
  friend bool operator==(const Label& a, const Label& b) {
    return a.family == b.family && a.index == b.index && a.indexed == b.indexed &&
           a.comp == b.comp;
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
};

// Right-hand side of a bracket relation: sum of coeff * generator.
using Expansion = std::vector<std::pair<Label, ParamScalar>>;

// Antisymmetric bracket table over a finite label set. Entries whose true
// result lies outside the spanned window are recorded as flagged rather than
// claimed; asking for an unrecorded pair is an error (it means the table was
// built wrong, not that the bracket is unknown).
class StructureTable {
 public:
  struct Entry {
    bool in_window = true;
    Expansion result;  // meaningful only when in_window
  };

  void set(const Label& a, const Label& b, Expansion rhs);
  void set_out_of_window(const Label& a, const Label& b);

  // [a, b] with antisymmetry applied; [a, a] = 0; nullopt when flagged.
  std::optional<Expansion> bracket(const Label& a, const Label& b) const;

  const std::map<std::pair<Label, Label>, Entry>& entries() const { return entries_; }
  std::set<Label> labels() const;

 private:
  std::map<std::pair<Label, Label>, Entry> entries_;
};

// A realized Lie algebra: differential-operator generators over a coordinate
// chart, together with the bracket table the realization is claimed to obey.
struct Representation {
  std::string id;
  int dim = 1;
  std::pair<int, int> window{0, 0};
  CoordSystem cs;
  std::set<std::string> params;
  std::map<Label, DiffOp> gens;
  StructureTable table;
};

}  // namespace lsi
