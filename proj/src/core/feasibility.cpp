#include "minkpair/feasibility.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "minkpair/error.hpp"

namespace minkpair {

namespace {

struct Row {
  std::vector<Integer> a;
  bool strict = false;
};

bool all_zero(const std::vector<Integer>& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& c) { return c == 0; });
}

void make_primitive(std::vector<Integer>& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : a) c /= g;
  }
}

// Normalizes rows, drops 0 <= 0, collapses duplicates (strict wins).
// Returns nullopt when a row reads 0 < 0.
std::optional<std::vector<Row>> tidy(std::vector<Row> rows) {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    if (all_zero(r.a)) {
      if (r.strict) return std::nullopt;
      continue;
    }
    make_primitive(r.a);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Row& l, const Row& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.strict > r.strict;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Row& l, const Row& r) { return l.a == r.a; }),
            out.end());
  return out;
}

bool fourier_motzkin(std::vector<Row> rows, std::size_t n) {
  auto current = tidy(std::move(rows));
  if (!current) return false;
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Row> pos, neg, next;
    for (auto& r : *current) {
      const int s = sgn(r.a[k]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        // p.a[k] > 0 > q.a[k]; combine with positive multipliers to cancel x_k.
        Row c;
        c.a.resize(n);
        const Integer mp = -q.a[k];
        const Integer mq = p.a[k];
        for (std::size_t i = 0; i < n; ++i) c.a[i] = mp * p.a[i] + mq * q.a[i];
        c.strict = p.strict || q.strict;
        next.push_back(std::move(c));
      }
    }
    current = tidy(std::move(next));
    if (!current) return false;
  }
  return true;
}

}  // namespace

HomogeneousConstraint constraint(const Direction3& a, Relation r) {
  return {{a.x(), a.y(), a.z()}, r};
}

HomogeneousConstraint constraint(const Point3& a, Relation r) {
  const std::array<Rational, 3> c{a.x, a.y, a.z};
  const Rational m(common_denominator(c));
  return {{(a.x * m).numerator(), (a.y * m).numerator(), (a.z * m).numerator()}, r};
}

HomogeneousConstraint constraint(const Direction2& a, Relation r) { return {{a.x(), a.y()}, r}; }

HomogeneousConstraint constraint(const Point2& a, Relation r) {
  const std::array<Rational, 2> c{a.x, a.y};
  const Rational m(common_denominator(c));
  return {{(a.x * m).numerator(), (a.y * m).numerator()}, r};
}

bool cone_strictly_feasible(std::span<const HomogeneousConstraint> constraints,
                            std::size_t dimension) {
  std::vector<Row> rows;
  std::vector<std::vector<Integer>> equalities;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != dimension) {
      throw Error("constraint dimension mismatch");
    }
    if (c.relation == Relation::Equal) {
      equalities.push_back(c.coefficients);
    } else {
      rows.push_back({c.coefficients, c.relation == Relation::Less});
    }
  }

  // Substitute equalities: each one removes a variable. The eliminated
  // variable is a linear function of the rest, so nonzero solutions of the
  // reduced system correspond exactly to nonzero solutions of the original.
  std::size_t n = dimension;
  while (!equalities.empty()) {
    auto e = std::move(equalities.back());
    equalities.pop_back();
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) {
        k = i;
        break;
      }
    }
    if (k == n) continue;  // 0 = 0
    if (e[k] < 0) {
      for (auto& c : e) c = -c;
    }
    auto eliminate = [&](std::vector<Integer>& a) {
      const Integer ak = a[k];
      if (ak != 0) {
        for (std::size_t i = 0; i < n; ++i) a[i] = e[k] * a[i] - ak * e[i];
      }
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(k));
    };
    for (auto& r : rows) eliminate(r.a);
    for (auto& q : equalities) eliminate(q);
    --n;
  }
  if (n == 0) return false;

  const bool has_strict =
      std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.strict; });
  if (has_strict) return fourier_motzkin(std::move(rows), n);

  // Only weak inequalities: the zero vector always satisfies them, so ask for
  // a solution with some coordinate strictly positive or strictly negative.
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      auto extended = rows;
      Row pin;
      pin.a.assign(n, Integer(0));
      pin.a[i] = -s;
      pin.strict = true;
      extended.push_back(std::move(pin));
      if (fourier_motzkin(std::move(extended), n)) return true;
    }
  }
  return false;
}

}  // namespace minkpair
