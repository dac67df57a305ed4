#include "lsi/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lsi {

// ---------------------------------------------------------------------------
// StructureTable
// ---------------------------------------------------------------------------

void StructureTable::set(const Label& a, const Label& b, Expansion rhs) {
  if (a == b) throw std::logic_error("bracket of a label with itself is identically zero");
  if (b < a) {
    for (auto& term : rhs) term.second = -term.second;
    entries_[{b, a}] = Entry{true, std::move(rhs)};
  } else {
    entries_[{a, b}] = Entry{true, std::move(rhs)};
  }
}

void StructureTable::set_out_of_window(const Label& a, const Label& b) {
  auto key = b < a ? std::make_pair(b, a) : std::make_pair(a, b);
  entries_[key] = Entry{false, {}};
}

std::optional<Expansion> StructureTable::bracket(const Label& a, const Label& b) const {
  if (a == b) return Expansion{};
  const bool swapped = b < a;
  auto it = entries_.find(swapped ? std::make_pair(b, a) : std::make_pair(a, b));
  if (it == entries_.end())
    throw std::out_of_range("no bracket recorded for [" + a.str() + ", " + b.str() + "]");
  if (!it->second.in_window) return std::nullopt;
  Expansion out = it->second.result;
  if (swapped)
    for (auto& term : out) term.second = -term.second;
  return out;
}

std::set<Label> StructureTable::labels() const {
  std::set<Label> out;
  for (const auto& [key, entry] : entries_) {
    out.insert(key.first);
    out.insert(key.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator builders
// ---------------------------------------------------------------------------

namespace {

enum class Mass { fixed, dual };

ParamScalar rp(const Rat& v) { return ParamScalar(GRat(v)); }

CoordMono tp(const Rat& e) {
  CoordMono m;
  if (e != 0) m["t"] = e;
  return m;
}

CoordMono& put(CoordMono& m, const std::string& c, const Rat& e) {
  if (e != 0) m[c] += e;
  return m;
}

DiffOp dterm(CoordMono pows, Monomial parts, Mat2 coeff) {
  return DiffOp::term(DKey{std::move(pows), std::move(parts)}, std::move(coeff));
}

DiffOp dterm(CoordMono pows, Monomial parts, ParamScalar coeff) {
  return dterm(std::move(pows), std::move(parts), Mat2::scalar(std::move(coeff)));
}

std::vector<std::string> rnames(int d) {
  if (d == 1) return {"r"};
  std::vector<std::string> out;
  for (int j = 1; j <= d; ++j) out.push_back("r" + std::to_string(j));
  return out;
}

std::vector<std::string> gnames(int d) {
  if (d == 1) return {"gamma"};
  std::vector<std::string> out;
  for (int j = 1; j <= d; ++j) out.push_back("gamma" + std::to_string(j));
  return out;
}

// --- Schroedinger family (mass or its Fourier dual along zeta) -------------

DiffOp sch_X(const Rat& n, int d, Mass mode, const Mat2& weight) {
  const auto r = rnames(d);
  DiffOp X = dterm(tp(n + 1), {{"t", 1}}, rp(-1));
  for (int j = 0; j < d; ++j) {
    CoordMono m = tp(n);
    put(m, r[j], 1);
    X = X + dterm(std::move(m), {{r[j], 1}}, rp(-(n + 1) / 2));
  }
  const Rat q = (n + 1) * n;
  if (q != 0) {
    for (int j = 0; j < d; ++j) {
      CoordMono m = tp(n - 1);
      put(m, r[j], 2);
      if (mode == Mass::fixed)
        X = X + dterm(std::move(m), {}, rp(-q / 4) * ParamScalar::param("M"));
      else
        X = X + dterm(std::move(m), {{"zeta", 1}}, ParamScalar(GRat(Rat(0), q / 4)));
    }
  }
  return X + dterm(tp(n), {}, rp(-(n + 1) / 2) * weight);
}

DiffOp sch_Y(const Rat& m, int j, int d, Mass mode) {
  const auto r = rnames(d);
  DiffOp Y = dterm(tp(m + Rat(1, 2)), {{r[j - 1], 1}}, rp(-1));
  const Rat c = m + Rat(1, 2);
  if (c != 0) {
    CoordMono mm = tp(m - Rat(1, 2));
    put(mm, r[j - 1], 1);
    if (mode == Mass::fixed)
      Y = Y + dterm(std::move(mm), {}, rp(-c) * ParamScalar::param("M"));
    else
      Y = Y + dterm(std::move(mm), {{"zeta", 1}}, ParamScalar(GRat(Rat(0), c)));
  }
  return Y;
}

DiffOp sch_M(const Rat& n, Mass mode) {
  if (mode == Mass::fixed) return dterm(tp(n), {}, -ParamScalar::param("M"));
  return dterm(tp(n), {{"zeta", 1}}, ParamScalar(GRat(Rat(0), Rat(1))));
}

DiffOp rotation(const std::string& a, const std::string& b) {
  return dterm({{a, 1}}, {{b, 1}}, rp(-1)) + dterm({{b, 1}}, {{a, 1}}, rp(1));
}

DiffOp parabolic_N(const Mat2& xi_weight) {
  return dterm({{"zeta", 1}}, {{"zeta", 1}}, rp(1)) + dterm(tp(1), {{"t", 1}}, rp(-1)) +
         dterm({}, {}, xi_weight);
}

// --- conformal Galilean family ---------------------------------------------

DiffOp cga_X(const Rat& n, int d, const ParamScalar& weight, bool exotic) {
  const auto r = rnames(d);
  const auto g = gnames(d);
  DiffOp X = dterm(tp(n + 1), {{"t", 1}}, rp(-1));
  for (int j = 0; j < d; ++j) {
    CoordMono m = tp(n);
    put(m, r[j], 1);
    X = X + dterm(std::move(m), {{r[j], 1}}, rp(-(n + 1)));
  }
  const Rat q = n * (n + 1);
  if (q != 0) {
    for (int j = 0; j < d; ++j) {
      CoordMono m = tp(n - 1);
      put(m, g[j], 1);
      put(m, r[j], 1);
      X = X + dterm(std::move(m), {}, rp(-q));
    }
  }
  X = X + dterm(tp(n), {}, rp(-(n + 1)) * weight);
  if (exotic && q != 0) {
    X = X + dterm({{"eta", 1}, {"r1", 1}}, {}, rp(-q)) +
        dterm({{"theta", 1}, {"r2", 1}}, {{"eta", 1}}, rp(q));
  }
  return X;
}

DiffOp cga_Y(const Rat& n, int j, int d, bool exotic) {
  const auto r = rnames(d);
  const auto g = gnames(d);
  DiffOp Y = dterm(tp(n + 1), {{r[j - 1], 1}}, rp(-1));
  CoordMono m = tp(n);
  put(m, g[j - 1], 1);
  Y = Y + dterm(std::move(m), {}, rp(-(n + 1)));
  if (!exotic) return Y;
  const Rat q = n * (n + 1);
  if (j == 1) {
    CoordMono me = tp(n);
    put(me, "eta", 1);
    Y = Y + dterm(std::move(me), {}, rp(-(n + 1)));
    if (q != 0) Y = Y + dterm({{"theta", 1}, {"r2", 1}}, {}, rp(-q));
  } else {
    CoordMono mt = tp(n);
    put(mt, "theta", 1);
    Y = Y + dterm(std::move(mt), {{"eta", 1}}, rp(n + 1));
    if (q != 0) Y = Y + dterm({{"theta", 1}, {"r1", 1}}, {}, rp(q));
  }
  return Y;
}

DiffOp cga_R(bool exotic) {
  DiffOp R = rotation("r1", "r2") + rotation("gamma1", "gamma2");
  if (exotic) {
    R = R + dterm({{"eta", 2}, {"theta", -1}}, {}, rp(Rat(-1, 2))) +
        dterm({{"theta", 1}}, {{"eta", 2}}, rp(Rat(-1, 2)));
  }
  return R;
}

// --- parabolic conformal set in the dual chart ------------------------------

ParamScalar x_plus_xi() { return ParamScalar::param("x") + ParamScalar::param("xi"); }

DiffOp dual_X1() {
  return dterm({{"r", 2}}, {{"zeta", 1}}, ParamScalar(GRat(Rat(0), Rat(1, 2)))) +
         dterm(tp(2), {{"t", 1}}, rp(-1)) + dterm({{"t", 1}, {"r", 1}}, {{"r", 1}}, rp(-1)) +
         dterm(tp(1), {}, -x_plus_xi());
}

DiffOp dual_Y(const Rat& m) { return sch_Y(m, 1, 1, Mass::dual); }

DiffOp dual_Vplus() {
  return dterm({{"zeta", 1}, {"r", 1}}, {{"zeta", 1}}, rp(-1)) +
         dterm({{"t", 1}, {"r", 1}}, {{"t", 1}}, rp(-1)) +
         dterm({{"zeta", 1}, {"t", 1}}, {{"r", 1}}, ParamScalar(GRat(Rat(0), Rat(-1)))) +
         dterm({{"r", 2}}, {{"r", 1}}, rp(Rat(-1, 2))) + dterm({{"r", 1}}, {}, -x_plus_xi());
}

DiffOp dual_D() {
  return dterm({{"zeta", 1}}, {{"zeta", 1}}, rp(-1)) + dterm(tp(1), {{"t", 1}}, rp(-1)) +
         dterm({{"r", 1}}, {{"r", 1}}, rp(-1)) + dterm({}, {}, -x_plus_xi());
}

DiffOp age_X0() {
  return dterm(tp(1), {{"t", 1}}, rp(-1)) + dterm({{"r", 1}}, {{"r", 1}}, rp(Rat(-1, 2))) +
         dterm({}, {}, rp(Rat(-1, 2)) * ParamScalar::param("x"));
}

// ---------------------------------------------------------------------------
// Table builders
// ---------------------------------------------------------------------------

bool contains(const std::vector<Rat>& v, const Rat& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Bracket rules shared by the massive Schroedinger algebra, its dual, the
// infinite extension and the N-extended variants:
//   [X_n, X_n'] = (n - n') X_{n+n'}
//   [X_n, Y_m]  = (n/2 - m) Y_{n+m}
//   [X_n, M_k]  = -k M_{n+k}
//   [Y_m, Y_m'] = delta_{jk} (m - m') M_{m+m'}
//   [R, Y^j]    = rotation action, [R, X] = [R, M] = 0
//   [N, X_n]    = -n X_n,  [N, Y_m] = -(m + 1/2) Y_m,  [N, M_k] = -(k+1) M_k
void sch_like_table(StructureTable& T, const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                    const std::vector<Rat>& ms, int d, bool withR, bool withN) {
  auto Ylab = [&](const Rat& m, int j) { return d == 1 ? Label::Y(m) : Label::Y(m, j); };

  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k < xs.size(); ++k) {
      const Rat n = xs[i], np = xs[k];
      if (contains(xs, n + np))
        T.set(Label::X(n), Label::X(np), {{Label::X(n + np), rp(n - np)}});
      else
        T.set_out_of_window(Label::X(n), Label::X(np));
    }

  for (const Rat& n : xs)
    for (const Rat& m : ys)
      for (int j = 1; j <= d; ++j) {
        const Rat c = n / 2 - m;
        if (c == 0)
          T.set(Label::X(n), Ylab(m, j), {});
        else if (contains(ys, n + m))
          T.set(Label::X(n), Ylab(m, j), {{Ylab(n + m, j), rp(c)}});
        else
          T.set_out_of_window(Label::X(n), Ylab(m, j));
      }

  for (const Rat& n : xs)
    for (const Rat& k : ms) {
      if (k == 0)
        T.set(Label::X(n), Label::M(k), {});
      else if (contains(ms, n + k))
        T.set(Label::X(n), Label::M(k), {{Label::M(n + k), rp(-k)}});
      else
        T.set_out_of_window(Label::X(n), Label::M(k));
    }

  std::vector<std::pair<Rat, int>> yall;
  for (const Rat& m : ys)
    for (int j = 1; j <= d; ++j) yall.emplace_back(m, j);
  for (std::size_t i = 0; i < yall.size(); ++i)
    for (std::size_t k = i + 1; k < yall.size(); ++k) {
      const auto& [m, j] = yall[i];
      const auto& [mp, jp] = yall[k];
      if (j != jp || m == mp) {
        T.set(Ylab(m, j), Ylab(mp, jp), {});
      } else if (contains(ms, m + mp)) {
        T.set(Ylab(m, j), Ylab(mp, jp), {{Label::M(m + mp), rp(m - mp)}});
      } else {
        T.set_out_of_window(Ylab(m, j), Ylab(mp, jp));
      }
    }

  for (const auto& [m, j] : yall)
    for (const Rat& k : ms) T.set(Ylab(m, j), Label::M(k), {});
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t k = i + 1; k < ms.size(); ++k)
      T.set(Label::M(ms[i]), Label::M(ms[k]), {});

  if (withR) {
    const Label R = Label::R(1, 2);
    for (const Rat& n : xs) T.set(R, Label::X(n), {});
    for (const Rat& k : ms) T.set(R, Label::M(k), {});
    for (const Rat& m : ys) {
      T.set(R, Ylab(m, 1), {{Ylab(m, 2), rp(1)}});
      T.set(R, Ylab(m, 2), {{Ylab(m, 1), rp(-1)}});
    }
  }

  if (withN) {
    const Label N = Label::N();
    for (const Rat& n : xs)
      T.set(N, Label::X(n), n == 0 ? Expansion{} : Expansion{{Label::X(n), rp(-n)}});
    for (const Rat& m : ys)
      T.set(N, Ylab(m, 1),
            m == Rat(-1, 2) ? Expansion{} : Expansion{{Ylab(m, 1), rp(-(m + Rat(1, 2)))}});
    for (const Rat& k : ms) T.set(N, Label::M(k), {{Label::M(k), rp(-(k + 1))}});
  }
}

//   [X_n, X_n'] = (n - n') X_{n+n'},  [X_n, Y_m] = (n - m) Y_{n+m},  [Y, Y] = 0
// with the exotic central column for d = 2:
//   [Y^1_n, Y^2_m] = delta_{n+m,0} (3 delta_{n,0} - 2) Theta
void cga_like_table(StructureTable& T, const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                    int d, bool exotic) {
  auto Ylab = [&](const Rat& m, int j) { return d == 1 ? Label::Y(m) : Label::Y(m, j); };

  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k < xs.size(); ++k) {
      const Rat n = xs[i], np = xs[k];
      if (contains(xs, n + np))
        T.set(Label::X(n), Label::X(np), {{Label::X(n + np), rp(n - np)}});
      else
        T.set_out_of_window(Label::X(n), Label::X(np));
    }

  for (const Rat& n : xs)
    for (const Rat& m : ys)
      for (int j = 1; j <= d; ++j) {
        const Rat c = n - m;
        if (c == 0)
          T.set(Label::X(n), Ylab(m, j), {});
        else if (contains(ys, n + m))
          T.set(Label::X(n), Ylab(m, j), {{Ylab(n + m, j), rp(c)}});
        else
          T.set_out_of_window(Label::X(n), Ylab(m, j));
      }

  for (int j = 1; j <= d; ++j)
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t k = i + 1; k < ys.size(); ++k) T.set(Ylab(ys[i], j), Ylab(ys[k], j), {});

  if (d == 2) {
    for (const Rat& n : ys)
      for (const Rat& m : ys) {
        Expansion rhs;
        if (exotic && n + m == 0) rhs = {{Label::Theta(), rp(n == 0 ? 1 : -2)}};
        T.set(Ylab(n, 1), Ylab(m, 2), std::move(rhs));
      }
    const Label R = Label::R(1, 2);
    for (const Rat& n : xs) T.set(R, Label::X(n), {});
    for (const Rat& m : ys) {
      T.set(R, Ylab(m, 1), {{Ylab(m, 2), rp(1)}});
      T.set(R, Ylab(m, 2), {{Ylab(m, 1), rp(-1)}});
    }
  }

  if (exotic) {
    const Label R = Label::R(1, 2), Th = Label::Theta();
    const Label h1 = Label::h(1), h2 = Label::h(2);
    for (const Rat& n : xs) T.set(Label::X(n), Th, {});
    for (const Rat& m : ys)
      for (int j = 1; j <= d; ++j) T.set(Ylab(m, j), Th, {});
    T.set(R, Th, {});
    T.set(R, h1, {{h2, rp(1)}});
    T.set(R, h2, {{h1, rp(-1)}});
    T.set(h1, h2, {{Th, rp(1)}});
    T.set(h1, Th, {});
    T.set(h2, Th, {});
    for (const Rat& n : xs) {
      if (n == 1) {
        T.set_out_of_window(Label::X(n), h1);
        T.set_out_of_window(Label::X(n), h2);
      } else {
        T.set(Label::X(n), h1, {});
        T.set(Label::X(n), h2, {});
      }
    }
    for (const Rat& m : ys) {
      T.set(Ylab(m, 1), h1, {});
      T.set(Ylab(m, 2), h2, {});
      if (m == 0) {
        T.set(Ylab(m, 1), h2, {{Th, rp(-1)}});
        T.set(Ylab(m, 2), h1, {{Th, rp(1)}});
      } else if (m == 1) {
        T.set_out_of_window(Ylab(m, 1), h2);
        T.set_out_of_window(Ylab(m, 2), h1);
      } else {
        T.set(Ylab(m, 1), h2, {});
        T.set(Ylab(m, 2), h1, {});
      }
    }
  }
}

void dual_cga_table(StructureTable& T) {
  const Label X1 = Label::X(1), Yp = Label::Y(Rat(1, 2)), Ym = Label::Y(Rat(-1, 2));
  const Label M0 = Label::M(0), Vp = Label::Vplus(), N = Label::N(), D = Label::D();
  T.set(X1, Yp, {});
  T.set(X1, Ym, {{Yp, rp(1)}});
  T.set(X1, M0, {});
  T.set(X1, Vp, {});
  T.set(X1, N, {{X1, rp(1)}});
  T.set(D, X1, {{X1, rp(-1)}});
  T.set(Yp, Ym, {{M0, rp(1)}});
  T.set(Yp, M0, {});
  T.set(Ym, M0, {});
  T.set(Vp, Yp, {{X1, rp(1)}});
  T.set(Vp, Ym, {{D, rp(1)}});
  T.set(Vp, M0, {{Yp, rp(1)}});
  T.set(N, Yp, {{Yp, rp(-1)}});
  T.set(N, Ym, {});
  T.set(N, M0, {{M0, rp(-1)}});
  T.set(N, Vp, {});
  T.set(N, D, {});
  T.set(D, Yp, {});
  T.set(D, Ym, {{Ym, rp(1)}});
  T.set(D, M0, {{M0, rp(1)}});
  T.set(D, Vp, {{Vp, rp(-1)}});
}

void age_table(StructureTable& T) {
  const Label X0 = Label::X(0), X1 = Label::X(1);
  const Label Yp = Label::Y(Rat(1, 2)), Ym = Label::Y(Rat(-1, 2)), M0 = Label::M(0);
  T.set(X0, X1, {{X1, rp(-1)}});
  T.set(X0, Yp, {{Yp, rp(Rat(-1, 2))}});
  T.set(X0, Ym, {{Ym, rp(Rat(1, 2))}});
  T.set(X0, M0, {});
  T.set(X1, Yp, {});
  T.set(X1, Ym, {{Yp, rp(1)}});
  T.set(X1, M0, {});
  T.set(Yp, Ym, {{M0, rp(1)}});
  T.set(Yp, M0, {});
  T.set(Ym, M0, {});
}

std::vector<Rat> int_range(int lo, int hi) {
  std::vector<Rat> out;
  for (int n = lo; n <= hi; ++n) out.emplace_back(n);
  return out;
}

std::vector<Rat> half_range(int lo, int hi) {
  std::vector<Rat> out;
  for (int k = lo; k < hi; ++k) out.push_back(Rat(2 * k + 1, 2));
  return out;
}

Mat2 jordan(const std::string& diag, const std::string& corner) {
  Mat2 m = Mat2::scalar(ParamScalar::param(diag));
  m.b = ParamScalar::param(corner);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog dispatch
// ---------------------------------------------------------------------------

std::vector<std::string> catalog_ids() {
  return {"sch",  "sv",   "cga",      "av",  "ecga",
          "dual-sch", "parabolic-N", "log-dual-sch", "dual-cga", "age"};
}

Representation build_representation(const std::string& id, int d,
                                    std::optional<std::pair<int, int>> window) {
  Representation rep;
  rep.id = id;
  rep.dim = d;

  auto require_dim = [&](std::initializer_list<int> allowed) {
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end())
      throw std::invalid_argument("catalog id '" + id + "' does not support dimension " +
                                  std::to_string(d));
  };
  auto resolve_window = [&](int lo, int hi, bool selectable) {
    if (selectable && window) {
      if (window->first > window->second)
        throw std::invalid_argument("window lower bound exceeds upper bound");
      rep.window = *window;
    } else {
      rep.window = {lo, hi};
    }
  };

  const bool schlike = id == "sch" || id == "sv" || id == "dual-sch" || id == "parabolic-N" ||
                       id == "log-dual-sch";

  if (schlike) {
    const bool dual = id != "sch" && id != "sv";
    require_dim(dual || id == "sv" ? std::initializer_list<int>{1}
                                   : std::initializer_list<int>{1, 2});
    resolve_window(id == "sv" ? -3 : -1, id == "sv" ? 3 : 1, id == "sv");
    const auto xs = int_range(rep.window.first, rep.window.second);
    const auto ys = half_range(rep.window.first, rep.window.second);
    const auto ms = id == "sch" || id == "dual-sch" || id == "parabolic-N" || id == "log-dual-sch"
                        ? std::vector<Rat>{Rat(0)}
                        : int_range(rep.window.first, rep.window.second);
    const Mass mode = dual ? Mass::dual : Mass::fixed;
    const bool log_blocks = id == "log-dual-sch";
    const Mat2 weight =
        log_blocks ? jordan("x", "xp") : Mat2::scalar(ParamScalar::param("x"));

    if (dual) rep.cs.base("zeta");
    rep.cs.base("t");
    for (const auto& rn : rnames(d)) rep.cs.base(rn);
    rep.params = {"x"};
    if (!dual) rep.params.insert("M");
    if (log_blocks) rep.params.insert("xp");

    for (const Rat& n : xs) rep.gens[Label::X(n)] = sch_X(n, d, mode, weight);
    for (const Rat& m : ys)
      for (int j = 1; j <= d; ++j)
        rep.gens[d == 1 ? Label::Y(m) : Label::Y(m, j)] = sch_Y(m, j, d, mode);
    for (const Rat& k : ms) rep.gens[Label::M(k)] = sch_M(k, mode);
    const bool withR = d == 2;
    if (withR) rep.gens[Label::R(1, 2)] = rotation("r1", "r2");
    const bool withN = id == "parabolic-N" || id == "log-dual-sch";
    if (withN) {
      rep.params.insert("xi");
      if (log_blocks) rep.params.insert("xip");
      rep.gens[Label::N()] =
          parabolic_N(log_blocks ? jordan("xi", "xip") : Mat2::scalar(ParamScalar::param("xi")));
    }
    sch_like_table(rep.table, xs, ys, ms, d, withR, withN);
    return rep;
  }

  if (id == "cga" || id == "av" || id == "ecga") {
    const bool exotic = id == "ecga";
    if (exotic)
      require_dim({2});
    else if (id == "av")
      require_dim({1});
    else
      require_dim({1, 2});
    resolve_window(id == "av" ? -3 : -1, id == "av" ? 3 : 1, id == "av");
    const auto xs = int_range(rep.window.first, rep.window.second);
    const auto ys = xs;

    rep.cs.base("t");
    for (const auto& rn : rnames(d)) rep.cs.base(rn);
    for (const auto& gn : gnames(d)) rep.cs.base(gn);
    if (exotic) {
      rep.cs.base("eta").base("theta");
      rep.params = {"lambda"};
    } else {
      rep.params = {"x"};
    }
    const ParamScalar weight = ParamScalar::param(exotic ? "lambda" : "x");

    for (const Rat& n : xs) rep.gens[Label::X(n)] = cga_X(n, d, weight, exotic);
    for (const Rat& n : ys)
      for (int j = 1; j <= d; ++j)
        rep.gens[d == 1 ? Label::Y(n) : Label::Y(n, j)] = cga_Y(n, j, d, exotic);
    if (d == 2) rep.gens[Label::R(1, 2)] = cga_R(exotic);
    if (exotic) {
      rep.gens[Label::Theta()] = dterm({{"theta", 1}}, {}, rp(1));
      rep.gens[Label::h(1)] = dterm({{"eta", 1}}, {}, rp(1));
      rep.gens[Label::h(2)] = dterm({{"theta", 1}}, {{"eta", 1}}, rp(-1));
    }
    cga_like_table(rep.table, xs, ys, d, exotic);
    return rep;
  }

  if (id == "dual-cga" || id == "age") {
    require_dim({1});
    resolve_window(id == "age" ? 0 : -1, 1, false);
    rep.cs.base("zeta").base("t").base("r");
    rep.params = {"x", "xi"};
    rep.gens[Label::X(1)] = dual_X1();
    rep.gens[Label::Y(Rat(1, 2))] = dual_Y(Rat(1, 2));
    rep.gens[Label::Y(Rat(-1, 2))] = dual_Y(Rat(-1, 2));
    rep.gens[Label::M(0)] = sch_M(0, Mass::dual);
    if (id == "dual-cga") {
      rep.gens[Label::Vplus()] = dual_Vplus();
      rep.gens[Label::N()] = parabolic_N(Mat2::scalar(ParamScalar::param("xi")));
      rep.gens[Label::D()] = dual_D();
      dual_cga_table(rep.table);
    } else {
      rep.gens[Label::X(0)] = age_X0();
      age_table(rep.table);
    }
    return rep;
  }

  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

DiffOp schrodinger_wave_op() {
  const ParamScalar w = ParamScalar::param("x") + ParamScalar::param("xi") - rp(Rat(1, 2));
  return dterm({}, {{"t", 1}, {"zeta", 1}}, ParamScalar(GRat(Rat(0), Rat(-2)))) +
         dterm({}, {{"r", 2}}, rp(-1)) +
         dterm({{"t", -1}}, {{"zeta", 1}}, ParamScalar(GRat(Rat(0), Rat(-2))) * w);
}

StructureTable two_charge_virasoro_table(int lo, int hi) {
  StructureTable T;
  const auto ns = int_range(lo, hi);
  auto in = [&](const Rat& v) { return contains(ns, v); };
  const ParamScalar cX = ParamScalar::param("cX"), cY = ParamScalar::param("cY");

  auto central = [&](const Rat& n, const ParamScalar& charge) {
    return rp((n * n * n - n) / 12) * charge;
  };

  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t k = i + 1; k < ns.size(); ++k) {
      const Rat n = ns[i], m = ns[k];
      Expansion rhs{{Label::X(n + m), rp(n - m)}};
      if (n + m == 0) rhs.push_back({Label::KX(), central(n, cX)});
      if (in(n + m))
        T.set(Label::X(n), Label::X(m), std::move(rhs));
      else
        T.set_out_of_window(Label::X(n), Label::X(m));
    }

  for (const Rat& n : ns)
    for (const Rat& m : ns) {
      Expansion rhs;
      if (n != m) rhs.push_back({Label::Y(n + m), rp(n - m)});
      if (n + m == 0 && n != 0) rhs.push_back({Label::KY(), central(n, cY)});
      if (n == m || in(n + m))
        T.set(Label::X(n), Label::Y(m), std::move(rhs));
      else
        T.set_out_of_window(Label::X(n), Label::Y(m));
    }

  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t k = i + 1; k < ns.size(); ++k) T.set(Label::Y(ns[i]), Label::Y(ns[k]), {});

  std::vector<Label> all;
  for (const Rat& n : ns) {
    all.push_back(Label::X(n));
    all.push_back(Label::Y(n));
  }
  for (const Label& l : all) {
    T.set(Label::KX(), l, {});
    T.set(Label::KY(), l, {});
  }
  T.set(Label::KX(), Label::KY(), {});
  return T;
}

}  // namespace lsi
