#include "bstab/sequiv.hpp"

#include <algorithm>

#include "bstab/error.hpp"

namespace bstab {

const char* to_string(DecomposeReason r) {
  switch (r) {
    case DecomposeReason::Ok: return "ok";
    case DecomposeReason::ZeroTarget: return "zero_target";
    case DecomposeReason::NonpositiveTop: return "nonpositive_top_degree";
  }
  return "?";
}

namespace {

Integer ceil_div(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::vector<Rational> flatten(const ChernVector& v) {
  std::vector<Rational> out{v.ch0};
  out.insert(out.end(), v.ch1.begin(), v.ch1.end());
  out.insert(out.end(), v.ch2.begin(), v.ch2.end());
  if (v.dim == 3) out.push_back(v.ch3);
  return out;
}

// Row-reduces [columns | rhs] in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const Rational f = rows[k][c];
      for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct Search {
  std::vector<std::vector<Rational>> columns;  // flattened classes
  const std::vector<Rational>* weights;
  const std::vector<long>* bounds;
  std::vector<bool> independent_from;  // classes i.. are linearly independent
  std::vector<long> current;
  std::vector<std::vector<long>> found;

  Search(const std::vector<ChernVector>& classes, const std::vector<Rational>& w, const std::vector<long>& b)
      : weights(&w), bounds(&b), current(classes.size(), 0) {
    for (const auto& c : classes) columns.push_back(flatten(c));
    for (std::size_t i = 0; i < columns.size(); ++i) {
      auto rows = matrix(i, nullptr);
      independent_from.push_back(row_reduce(rows, columns.size() - i).size() == columns.size() - i);
    }
  }

  std::vector<std::vector<Rational>> matrix(std::size_t from, const std::vector<Rational>* rhs) const {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < columns.front().size(); ++r) {
      std::vector<Rational> row;
      for (std::size_t c = from; c < columns.size(); ++c) row.push_back(columns[c][r]);
      if (rhs) row.push_back((*rhs)[r]);
      rows.push_back(std::move(row));
    }
    return rows;
  }

  // With independent columns the multiplicities are the unique exact solution.
  void solve(std::size_t from, const std::vector<Rational>& remaining) {
    auto rows = matrix(from, &remaining);
    const std::size_t n = columns.size() - from;
    const auto pivots = row_reduce(rows, n);
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
      if (rows[r][n] != 0) return;
    for (std::size_t r = 0; r < n; ++r) {
      const Rational& x = rows[r][n];
      if (x.get_den() != 1 || x < 0 || x.get_num() > (*bounds)[from + r]) return;
      current[from + r] = x.get_num().get_si();
    }
    found.push_back(current);
    std::fill(current.begin() + static_cast<long>(from), current.end(), 0);
  }

  // Depth-first over catalog order until the rest is determined; the budget prunes every branch.
  void run(std::size_t i, std::vector<Rational> remaining, Rational budget) {
    if (independent_from[i]) {
      solve(i, remaining);
      return;
    }
    for (long m = 0; m <= (*bounds)[i] && budget >= 0; ++m) {
      current[i] = m;
      run(i + 1, remaining, budget);
      for (std::size_t r = 0; r < remaining.size(); ++r) remaining[r] -= columns[i][r];
      budget -= (*weights)[i];
    }
    current[i] = 0;
  }
};

}  // namespace

DecomposeResult decompose(const ContractionModel& model, const ChernVector& target, const Rational& b, long bound_scale) {
  model.check(target);
  if (bound_scale < 1) fail(ErrorCode::InvalidArgument, "bound_scale must be at least 1");
  if (is_surface(model.kind())) {
    if (b != 0) fail(ErrorCode::Precondition, "precondition violated: surface decompositions use b = 0");
  } else if (!solve_b_range(model).contains(QuadExtNumber(b))) {
    fail(ErrorCode::Precondition, "precondition violated: b = " + to_string(b) + " is outside the positivity range of kind " +
                                      std::string(to_string(model.kind())));
  }

  const auto catalog = simples(model);
  std::vector<ChernVector> classes;
  std::vector<Rational> weights;
  for (const auto& s : catalog) {
    classes.push_back(s.shifted());
    const Rational w = is_surface(model.kind()) ? s.shifted().top() : twisted_ch3_poly(model, s)(b);
    if (w <= 0) fail(ErrorCode::Precondition, "precondition violated: simple " + s.name + " has nonpositive twisted top degree");
    weights.push_back(w);
  }

  DecomposeResult result;
  result.budget = is_surface(model.kind()) ? target.top() : twist(model, target, b).ch3;
  if (target == model.zero()) {
    result.reason = DecomposeReason::ZeroTarget;
    result.solutions.push_back({});
    return result;
  }
  if (result.budget <= 0) {
    result.reason = DecomposeReason::NonpositiveTop;
    return result;
  }

  const Rational min_weight = *std::min_element(weights.begin(), weights.end());
  const long bound = ceil_div(result.budget / min_weight).get_si() * bound_scale;
  result.bounds.assign(classes.size(), bound);

  Search search(classes, weights, result.bounds);
  search.run(0, flatten(target), result.budget);
  std::sort(search.found.begin(), search.found.end());
  for (const auto& m : search.found) {
    MultiplicityVector mv;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) mv[catalog[i].name] = m[i];
    result.solutions.push_back(std::move(mv));
  }
  return result;
}

bool s_equivalent(const MultiplicityVector& m1, const MultiplicityVector& m2) {
  const auto nonzero = [](const MultiplicityVector& m) {
    MultiplicityVector out;
    for (const auto& [k, v] : m)
      if (v != 0) out[k] = v;
    return out;
  };
  return nonzero(m1) == nonzero(m2);
}

ChernVector class_of(const ContractionModel& model, const MultiplicityVector& m) {
  const auto catalog = simples(model);
  ChernVector sum = model.zero();
  for (const auto& [name, count] : m) {
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const SimpleClass& s) { return s.name == name; });
    if (it == catalog.end()) fail(ErrorCode::InvalidArgument, "unknown simple class \"" + name + "\"");
    sum += it->shifted().scaled(count);
  }
  return sum;
}

}  // namespace bstab
