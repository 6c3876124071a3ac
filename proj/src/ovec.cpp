#include "ordsolid/ovec.hpp"

#include <algorithm>
#include <set>

#include "ordsolid/error.hpp"

namespace ordsolid {

namespace {

struct Inequality {
  RationalVector a;  // a . lambda <= b
  Rational b;
};

// std::vector's own ordering goes through operator<=>, which gmpxx lacks.
struct VectorLess {
  bool operator()(const RationalVector& a, const RationalVector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
  }
};

struct InequalityLess {
  bool operator()(const std::pair<RationalVector, Rational>& a, const std::pair<RationalVector, Rational>& b) const {
    if (VectorLess{}(a.first, b.first)) return true;
    if (VectorLess{}(b.first, a.first)) return false;
    return cmp(a.second, b.second) < 0;
  }
};

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalVector negate(RationalVector v) {
  for (auto& x : v) x = -x;
  return v;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalMatrix sub(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub(a[i], b[i]);
  return out;
}

bool combination_matches(const std::vector<RationalVector>& gens, const RationalVector& v,
                         const RationalVector& lambda) {
  if (lambda.size() != gens.size()) return false;
  RationalVector sum(v.size(), 0);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (lambda[j] < 0) return false;
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += lambda[j] * gens[j][i];
  }
  return sum == v;
}

void require_dims(const std::vector<RationalVector>& gens, const RationalVector& v) {
  for (const auto& g : gens)
    if (g.size() != v.size()) throw ShapeMismatch("generator dimension differs from the vector's");
}

// Scales so the first nonzero coefficient has absolute value 1.
Inequality normalized(Inequality q) {
  for (const auto& x : q.a)
    if (x != 0) {
      Rational s = abs(x);
      for (auto& y : q.a) y /= s;
      q.b /= s;
      break;
    }
  return q;
}

// Inverse of a square matrix by Gauss-Jordan; the matrix must be invertible.
RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InvalidStructure("singular basis matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

ConeMembership membership_fourier_motzkin(const std::vector<RationalVector>& generators, const RationalVector& v) {
  require_dims(generators, v);
  const std::size_t m = generators.size(), d = v.size();
  if (m > kEliminationCap) throw CapExceeded("too many generators for Fourier-Motzkin elimination");
  if (m == 0) return {is_zero(v), {}};
  std::vector<std::vector<Inequality>> stage(1);
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = generators[j][i];
    stage[0].push_back({row, v[i]});
    stage[0].push_back({negate(row), -v[i]});
  }
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector row(m, 0);
    row[j] = -1;
    stage[0].push_back({row, 0});
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Inequality> pos, neg, next;
    for (const auto& q : stage[k]) {
      if (q.a[k] > 0) pos.push_back(q);
      else if (q.a[k] < 0) neg.push_back(q);
      else next.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Inequality c{RationalVector(m), p.b / p.a[k] - n.b / n.a[k]};
        for (std::size_t j = 0; j < m; ++j) c.a[j] = p.a[j] / p.a[k] - n.a[j] / n.a[k];
        c.a[k] = 0;
        next.push_back(c);
      }
    std::set<std::pair<RationalVector, Rational>, InequalityLess> seen;
    std::vector<Inequality> kept;
    for (auto& q : next) {
      q = normalized(std::move(q));
      if (is_zero(q.a)) {
        if (q.b < 0) return {false, {}};
        continue;
      }
      if (seen.insert({q.a, q.b}).second) kept.push_back(std::move(q));
    }
    stage.push_back(std::move(kept));
  }
  // back-substitution: the largest lower bound of each variable is feasible
  RationalVector lambda(m, 0);
  for (std::size_t k = m; k-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& q : stage[k]) {
      if (q.a[k] == 0) continue;
      Rational rhs = q.b;
      for (std::size_t j = k + 1; j < m; ++j) rhs -= q.a[j] * lambda[j];
      Rational bound = rhs / q.a[k];
      if (q.a[k] > 0) hi = hi ? std::min(*hi, bound) : bound;
      else lo = lo ? std::max(*lo, bound) : bound;
    }
    lambda[k] = lo ? *lo : Rational(0);
    if (hi && lambda[k] > *hi) throw InvalidStructure("Fourier-Motzkin back-substitution inconsistent");
  }
  if (!combination_matches(generators, v, lambda)) throw InvalidStructure("Fourier-Motzkin witness does not check");
  return {true, std::move(lambda)};
}

ConeMembership membership_simplex(const std::vector<RationalVector>& generators, const RationalVector& v) {
  require_dims(generators, v);
  const std::size_t m = generators.size(), d = v.size();
  // phase 1 on G lambda + a = v (rows flipped so v >= 0), minimizing sum a
  const std::size_t cols = m + d;
  std::vector<RationalVector> t(d, RationalVector(cols, 0));
  RationalVector rhs(d);
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) {
    const int sign = v[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) t[i][j] = sign * generators[j][i];
    t[i][m + i] = 1;
    rhs[i] = sign * v[i];
    basis[i] = m + i;
  }
  RationalVector cost(cols, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) cost[j] -= t[i][j];
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols && enter == cols; ++j)
      if (cost[j] < 0) enter = j;
    if (enter == cols) break;
    std::size_t leave = d;
    Rational best;
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == d) throw InvalidStructure("phase-1 objective unbounded");
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  RationalVector lambda(m, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i] >= m && rhs[i] != 0) return {false, {}};
    if (basis[i] < m) lambda[basis[i]] = rhs[i];
  }
  if (!combination_matches(generators, v, lambda)) throw InvalidStructure("simplex witness does not check");
  return {true, std::move(lambda)};
}

ConeMembership cone_member(const ConeSpace& c, const RationalVector& v) {
  if (v.size() != c.dim) throw ShapeMismatch("vector dimension differs from the space's");
  if (c.generators.size() <= kEliminationCap) return membership_fourier_motzkin(c.generators, v);
  return membership_simplex(c.generators, v);
}

std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
  std::vector<RationalVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw ShapeMismatch("vector dimension differs from the space's");
    rows.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational piv = rows[r][c];
    for (auto& x : rows[r]) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(const std::vector<RationalVector>& vectors, std::size_t dim) { return span_basis(vectors, dim).size(); }

std::vector<RationalVector> lineality_space(const ConeSpace& c) {
  std::vector<RationalVector> two_sided;
  for (const auto& g : c.generators)
    if (cone_member(c, negate(g)).member) two_sided.push_back(g);
  return span_basis(two_sided, c.dim);
}

bool is_generating(const ConeSpace& c) { return rank(c.generators, c.dim) == c.dim; }
bool is_pointed(const ConeSpace& c) { return lineality_space(c).empty(); }

void validate_cone(const ConeSpace& c) {
  for (const auto& g : c.generators)
    if (g.size() != c.dim) throw InvalidStructure("generator dimension differs from the space's");
  if (c.requires_pointed && !is_pointed(c)) throw InvalidStructure("cone required to be pointed is not");
  if (c.requires_generating && !is_generating(c)) throw InvalidStructure("cone required to be generating is not");
}

ConeSpace free_ovec(const FinitePoset& x, FreeMode mode) {
  const std::size_t n = x.size();
  ConeSpace out{n, {}, true, mode == FreeMode::positive_cone};
  auto e = [&](std::size_t i) {
    RationalVector v(n, 0);
    v[i] = 1;
    return v;
  };
  if (mode == FreeMode::positive_cone)
    for (std::size_t i = 0; i < n; ++i) out.generators.push_back(e(i));
  for (auto [a, b] : x.pairs())
    if (a != b) out.generators.push_back(sub(e(b), e(a)));
  return out;
}

RationalVector matvec(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw ShapeMismatch("matrix width differs from vector length");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(a.size(), RationalVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw ShapeMismatch("matrix shapes do not compose");
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

RationalMatrix scalar_matrix(std::size_t n, const Rational& s) {
  RationalMatrix m(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = s;
  return m;
}

bool is_positive(const PositiveLinearMap& f) {
  for (const auto& g : f.dom.generators)
    if (!cone_member(f.cod, matvec(f.matrix, g)).member) return false;
  return true;
}

bool is_monotone_into(const FinitePoset& x, const ConeSpace& w, const std::vector<RationalVector>& values) {
  if (values.size() != x.size()) throw ShapeMismatch("one value per element required");
  for (auto [a, b] : x.pairs())
    if (!cone_member(w, sub(values[b], values[a])).member) return false;
  return true;
}

LinearExtension extend_linear(const std::vector<RationalVector>& values, const ConeSpace& fx, const ConeSpace& w) {
  if (values.size() != fx.dim) throw ShapeMismatch("one value per basis vector required");
  RationalMatrix m(w.dim, RationalVector(fx.dim, 0));
  for (std::size_t j = 0; j < fx.dim; ++j) {
    if (values[j].size() != w.dim) throw ShapeMismatch("value dimension differs from the target's");
    for (std::size_t i = 0; i < w.dim; ++i) m[i][j] = values[j][i];
  }
  LinearExtension out{{std::move(m), fx, w}, false};
  out.positive = is_positive(out.map);
  return out;
}

bool hom_leq(const PositiveLinearMap& f, const PositiveLinearMap& g) {
  const auto diff = sub(g.matrix, f.matrix);
  for (const auto& e : f.dom.generators)
    if (!cone_member(f.cod, matvec(diff, e)).member) return false;
  return true;
}

OVecCoinserter coinserter_ovec(const PositiveLinearMap& f, const PositiveLinearMap& g) {
  if (f.dom.dim != g.dom.dim || f.cod.dim != g.cod.dim) throw ShapeMismatch("co-inserter maps must share dom and cod");
  const ConeSpace& w = f.cod;
  const std::size_t d = w.dim;
  OVecCoinserter out;
  const auto diff = sub(g.matrix, f.matrix);
  for (const auto& gen : w.generators)
    if (!is_zero(gen)) out.combined.push_back(gen);
  for (const auto& e : f.dom.generators)
    if (auto s = matvec(diff, e); !is_zero(s)) out.combined.push_back(std::move(s));
  out.lineality = lineality_space(ConeSpace{d, out.combined, false, false});
  const std::size_t k = out.lineality.size();
  // basis of W: the lineality basis followed by standard vectors completing it
  std::vector<RationalVector> cols = out.lineality;
  for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
    RationalVector e(d, 0);
    e[i] = 1;
    cols.push_back(e);
    if (rank(cols, d) < cols.size()) cols.pop_back();
  }
  RationalMatrix b(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) b[i][j] = cols[j][i];
  const auto inv = inverse(b);
  RationalMatrix proj(inv.begin() + static_cast<std::ptrdiff_t>(k), inv.end());
  out.section.assign(d, RationalVector(d - k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = k; j < d; ++j) out.section[i][j - k] = b[i][j];
  std::set<RationalVector, VectorLess> gens;
  for (const auto& c : out.combined)
    if (auto img = matvec(proj, c); !is_zero(img)) gens.insert(std::move(img));
  out.object = ConeSpace{d - k, {gens.begin(), gens.end()}, true, w.requires_generating};
  out.projection = PositiveLinearMap{std::move(proj), w, out.object};
  return out;
}

std::optional<PositiveLinearMap> factor_through(const OVecCoinserter& c, const PositiveLinearMap& h) {
  if (h.dom.dim != c.projection.dom.dim) throw ShapeMismatch("map does not start at the co-inserter's codomain");
  for (const auto& u : c.lineality)
    if (!is_zero(matvec(h.matrix, u))) return std::nullopt;
  PositiveLinearMap out{matmul(h.matrix, c.section), c.object, h.cod};
  // a zero-dimensional quotient leaves matmul without a column count
  const auto back = c.object.dim == 0 ? RationalMatrix(h.matrix.size(), RationalVector(h.dom.dim, 0))
                                      : matmul(out.matrix, c.projection.matrix);
  if (back != h.matrix) throw InvalidStructure("factorization does not recompose");
  if (!is_positive(out)) return std::nullopt;
  return out;
}

CounterexampleReport check_free_unit_counterexample() {
  const IndexPair ab[] = {{0, 1}};
  const auto x = FinitePoset::from_pairs({"a", "b"}, ab);
  const auto fx = free_ovec(x, FreeMode::pointwise);
  const ConeSpace line{1, {{Rational(1)}}, true, true};
  const std::vector<RationalVector> f{{Rational(0)}, {Rational(2)}}, g{{Rational(2)}, {Rational(3)}};
  CounterexampleReport rep;
  rep.f_monotone = is_monotone_into(x, line, f);
  rep.g_monotone = is_monotone_into(x, line, g);
  rep.f_below_g_on_generators = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    rep.f_below_g_on_generators = rep.f_below_g_on_generators && cone_member(line, sub(g[i], f[i])).member;
  auto fs = extend_linear(f, fx, line), gs = extend_linear(g, fx, line);
  rep.f_positive = fs.positive;
  rep.g_positive = gs.positive;
  rep.hom_leq = hom_leq(fs.map, gs.map);
  rep.u = {Rational(-1), Rational(1)};
  rep.f_at_u = matvec(fs.map.matrix, rep.u)[0];
  rep.g_at_u = matvec(gs.map.matrix, rep.u)[0];
  return rep;
}

InserterFailureReport check_inserter_failure() {
  const ConeSpace line{1, {{Rational(1)}}, true, true};
  const PositiveLinearMap r{scalar_matrix(1, 1), line, line}, s{scalar_matrix(1, 2), line, line};
  InserterFailureReport rep;
  // equalizer = kernel of s - r
  rep.equalizer_dim = line.dim - rank(sub(s.matrix, r.matrix), line.dim);
  // the Pos inserter {v >= 0 : r v <= s v} is the whole cone iff s - r maps
  // every generator into the cone
  rep.pos_inserter_is_full_cone = true;
  for (const auto& e : line.generators)
    rep.pos_inserter_is_full_cone = rep.pos_inserter_is_full_cone && cone_member(line, matvec(sub(s.matrix, r.matrix), e)).member;
  rep.preserves_inserters = rep.equalizer_dim == line.dim || !rep.pos_inserter_is_full_cone;
  // hom order upstairs is discrete: a <= b on all of V (both signs of each
  // basis vector) must force a = b
  auto below_everywhere = [&](const PositiveLinearMap& a, const PositiveLinearMap& b) {
    const auto diff = sub(b.matrix, a.matrix);
    for (std::size_t i = 0; i < line.dim; ++i) {
      RationalVector e(line.dim, 0);
      e[i] = 1;
      if (!cone_member(line, matvec(diff, e)).member || !cone_member(line, matvec(diff, negate(e))).member)
        return false;
    }
    return true;
  };
  const PositiveLinearMap maps[] = {r, s};
  rep.order_faithful = true;
  for (const auto& a : maps)
    for (const auto& b : maps)
      if (below_everywhere(a, b) && a.matrix != b.matrix) rep.order_faithful = false;
  return rep;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + ")";
}

}  // namespace ordsolid
