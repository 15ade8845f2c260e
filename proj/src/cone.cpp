#include "diag/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace diag {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  bool contains(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if ((w_[i] & o.w_[i]) != o.w_[i]) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = igcd(g, x);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

using QMatrix = std::vector<std::vector<Rational>>;

// Row-reduces a copy of the rows; returns the indices of a maximal
// independent subset (in input order) and a kernel vector when deficient.
struct RankInfo {
  std::vector<std::size_t> basis;
  IntVector kernel;  // empty when full column rank
};

RankInfo rank_info(const std::vector<IntVector>& rows, std::size_t d) {
  RankInfo info;
  QMatrix echelon;  // reduced rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && echelon.size() < d; ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[pivots[k]] == 0) continue;
      Rational f = v[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t j = 0; j < d; ++j) v[j] -= f * echelon[k][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    info.basis.push_back(r);
  }
  if (echelon.size() < d) {
    // Back-substitute with one free column set to 1.
    std::vector<bool> is_pivot(d, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::vector<Rational> x(d, Rational(0));
    x[free] = 1;
    for (std::size_t k = echelon.size(); k-- > 0;) {
      Rational s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != pivots[k]) s += echelon[k][j] * x[j];
      }
      x[pivots[k]] = -s / echelon[k][pivots[k]];
    }
    Integer l = 1;
    for (const auto& q : x) l = ilcm(l, Integer(q.get_den()));
    IntVector kv;
    for (const auto& q : x) kv.push_back(Integer(q.get_num()) * (l / Integer(q.get_den())));
    info.kernel = primitive(kv);
  }
  return info;
}

struct Ray {
  IntVector v;
  Bits zero;
};

}  // namespace

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

RationalCone read_cone(std::istream& in) {
  RationalCone cone;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    IntVector row;
    while (ls >> tok) row.push_back(parse_integer(tok));
    if (!row.empty()) cone.halfspaces.push_back(std::move(row));
  }
  return cone;
}

RationalCone parse_cone(const std::string& text) {
  std::istringstream in(text);
  return read_cone(in);
}

std::vector<IntVector> extremal_rays(const RationalCone& cone) {
  const auto& rows = cone.halfspaces;
  if (rows.empty()) throw InvalidInput("cone has no constraints");
  const std::size_t d = rows.front().size();
  if (d == 0) throw InvalidInput("cone of dimension zero");
  for (const auto& r : rows) {
    if (r.size() != d) throw InvalidInput("constraint rows differ in length");
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; })) {
      throw InvalidInput("zero constraint row");
    }
  }
  auto info = rank_info(rows, d);
  if (!info.kernel.empty()) {
    throw Degenerate("cone is not pointed; lineality direction " + to_string(info.kernel));
  }
  const std::size_t m = rows.size();

  // Initial simplicial cone from d independent rows: rays are the columns of
  // the inverse, i.e. the adjugate columns up to the sign of the determinant.
  QMatrix b(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) b[i][j] = rows[info.basis[i]][j];
  }
  QMatrix inv(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (b[p][c] == 0) ++p;
    std::swap(b[p], b[c]);
    std::swap(inv[p], inv[c]);
    Rational f = 1 / b[c][c];
    for (std::size_t j = 0; j < d; ++j) {
      b[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || b[r][c] == 0) continue;
      Rational g = b[r][c];
      for (std::size_t j = 0; j < d; ++j) {
        b[r][j] -= g * b[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  std::vector<Ray> rays;
  std::vector<bool> used(m, false);
  for (std::size_t j = 0; j < d; ++j) {
    Integer l = 1;
    for (std::size_t i = 0; i < d; ++i) l = ilcm(l, Integer(inv[i][j].get_den()));
    IntVector v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(Integer(inv[i][j].get_num()) * (l / Integer(inv[i][j].get_den())));
    Ray ray{primitive(v), Bits(m)};
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) ray.zero.set(info.basis[k]);
    }
    rays.push_back(std::move(ray));
  }
  for (auto idx : info.basis) used[idx] = true;

  for (std::size_t c = 0; c < m; ++c) {
    if (used[c]) continue;
    const auto& row = rows[c];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(row, rays[i].v);
      if (s[i] > 0) pos.push_back(i);
      if (s[i] < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      Ray r = rays[i];
      if (s[i] == 0) r.zero.set(c);
      next.push_back(std::move(r));
    }
    for (auto ip : pos) {
      for (auto in : neg) {
        Bits common = rays[ip].zero & rays[in].zero;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == in) continue;
          if (rays[k].zero.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = s[ip] * rays[in].v[j] - s[in] * rays[ip].v[j];
        Ray r{primitive(v), common};
        r.zero.set(c);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    used[c] = true;
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MinForm min_self_intersection(const RationalCone& cone) {
  if (cone.dimension() != 6) throw InvalidInput("the intersection form needs 6-dimensional classes");
  auto rays = extremal_rays(cone);
  const auto& m = table1();
  MinForm best;
  bool first = true;
  for (const auto& r : rays) {
    Integer q = 0;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) q += r[i] * m[i][j] * r[j];
    }
    if (first || q < best.value) {
      best = {q, r};
      first = false;
    }
  }
  return best;
}

}  // namespace diag
