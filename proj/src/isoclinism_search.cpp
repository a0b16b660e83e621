#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "xlie/isoclinism.hpp"

namespace xlie {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Vec = std::vector<u32>;

struct ModP {
  u32 p = 2;
  u32 add(u32 a, u32 b) const {
    u64 s = u64(a) + b;
    return s >= p ? u32(s - p) : u32(s);
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : u32(u64(a) + p - b); }
  u32 mul(u32 a, u32 b) const { return u32(u64(a) * b % p); }
  u32 inv(u32 a) const {
    u32 r = 1;
    u32 e = p - 2;
    while (e > 0) {
      if (e & 1) {
        r = mul(r, a);
      }
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

Vec to_residues(const Vector& v) {
  Vec out;
  for (const Scalar& s : v) {
    out.push_back(s.residue());
  }
  return out;
}

// Dense n x n bilinear table: t[i * n + j] is the image of the basis pair.
struct Table {
  std::size_t rows = 0;  // first argument dimension
  std::size_t cols = 0;  // second argument dimension
  std::size_t out = 0;
  std::vector<Vec> t;
  const Vec& at(std::size_t i, std::size_t j) const { return t[i * cols + j]; }
};

Table lie_table(const LieAlgebra& g) {
  Table t{g.dim(), g.dim(), g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      t.t.push_back(to_residues(g.structure(i, j)));
    }
  }
  return t;
}

struct XModP {
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  Table l1;
  Table l0;
  std::vector<Vec> d;  // d[j] = image of f_j
  Table action;        // action.at(i, j) = [e_i, f_j]
};

XModP to_modp(const CrossedModule& x) {
  XModP m;
  m.n1 = x.dim1();
  m.n0 = x.dim0();
  m.l1 = lie_table(x.l1());
  m.l0 = lie_table(x.l0());
  for (std::size_t j = 0; j < m.n1; ++j) {
    m.d.push_back(to_residues(x.boundary().column(j)));
  }
  m.action = Table{m.n0, m.n1, m.n1, {}};
  for (std::size_t i = 0; i < m.n0; ++i) {
    for (std::size_t j = 0; j < m.n1; ++j) {
      m.action.t.push_back(to_residues(x.action(i, j)));
    }
  }
  return m;
}

Table pairing_table(const std::vector<Vector>& c, std::size_t rows, std::size_t cols,
                    std::size_t out) {
  Table t{rows, cols, out, {}};
  for (const Vector& v : c) {
    t.t.push_back(to_residues(v));
  }
  return t;
}

// Linear map by columns.
Vec apply(const ModP& f, const std::vector<Vec>& cols, const Vec& v, std::size_t out) {
  Vec r(out, 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) {
      continue;
    }
    for (std::size_t i = 0; i < out; ++i) {
      r[i] = f.add(r[i], f.mul(v[k], cols[k][i]));
    }
  }
  return r;
}

Vec bilinear(const ModP& f, const Table& t, const Vec& u, const Vec& v) {
  Vec r(t.out, 0);
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (u[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (v[j] == 0) {
        continue;
      }
      u32 c = f.mul(u[i], v[j]);
      const Vec& e = t.at(i, j);
      for (std::size_t k = 0; k < t.out; ++k) {
        r[k] = f.add(r[k], f.mul(c, e[k]));
      }
    }
  }
  return r;
}

// Fully reduced echelon rows with pivots among the first `left` coordinates.
struct Echelon {
  std::size_t left = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  // Reduces v by the rows; returns false when its left part vanishes but the
  // right part does not.
  bool insert(const ModP& f, Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      u32 c = v[pivots[r]];
      if (c != 0) {
        for (std::size_t k = 0; k < v.size(); ++k) {
          v[k] = f.sub(v[k], f.mul(c, rows[r][k]));
        }
      }
    }
    std::size_t piv = 0;
    while (piv < left && v[piv] == 0) {
      ++piv;
    }
    if (piv == left) {
      return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
    }
    u32 inv = f.inv(v[piv]);
    for (u32& x : v) {
      x = f.mul(x, inv);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      u32 c = rows[r][piv];
      if (c != 0) {
        for (std::size_t k = 0; k < v.size(); ++k) {
          rows[r][k] = f.sub(rows[r][k], f.mul(c, v[k]));
        }
      }
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  bool independent(const ModP& f, Vec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      u32 c = v[pivots[r]];
      if (c != 0) {
        for (std::size_t k = 0; k < v.size(); ++k) {
          v[k] = f.sub(v[k], f.mul(c, rows[r][k]));
        }
      }
    }
    return std::any_of(v.begin(), v.end(), [](u32 x) { return x != 0; });
  }

  // With a full-rank left part, the map sending each left unit vector to the
  // matching right part, as columns.
  std::vector<Vec> solution(std::size_t right) const {
    std::vector<Vec> cols(left, Vec(right, 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      cols[pivots[r]] = Vec(rows[r].begin() + left, rows[r].end());
    }
    return cols;
  }
};

enum class CheckKind { Hom0, Hom1, Boundary, Action, Pair0, Pair1 };

struct Check {
  CheckKind kind;
  std::size_t a;
  std::size_t b;
};

// The search problem: an isomorphism eta between two crossed modules,
// optionally carrying the commutator pairings to a forced xi.
struct Problem {
  ModP f;
  XModP src;
  XModP dst;
  bool pairing = false;
  std::size_t m1 = 0;
  std::size_t m0 = 0;
  Table c1s, c1t, c0s, c0t;
  XModP comm_src;
  XModP comm_dst;
  std::vector<std::vector<Check>> checks;  // by step

  std::size_t k0() const { return src.n0; }
  std::size_t k1() const { return src.n1; }
  std::size_t steps() const { return k0() + k1(); }
};

std::size_t step_of1(const Problem& pb, std::size_t j) { return pb.k0() + j; }

std::size_t max_support(const Vec& v, std::size_t offset, std::size_t base) {
  std::size_t m = base;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) {
      m = std::max(m, offset + k);
    }
  }
  return m;
}

void schedule(Problem& pb) {
  pb.checks.assign(pb.steps(), {});
  const XModP& s = pb.src;
  for (std::size_t a = 0; a < s.n0; ++a) {
    for (std::size_t b = a + 1; b < s.n0; ++b) {
      std::size_t at = max_support(s.l0.at(a, b), 0, b);
      pb.checks[at].push_back({CheckKind::Hom0, a, b});
      if (pb.pairing) {
        pb.checks[b].push_back({CheckKind::Pair0, a, b});
      }
    }
  }
  for (std::size_t j = 0; j < s.n1; ++j) {
    std::size_t at = max_support(s.d[j], 0, step_of1(pb, j));
    pb.checks[at].push_back({CheckKind::Boundary, j, 0});
  }
  for (std::size_t a = 0; a < s.n1; ++a) {
    for (std::size_t b = a + 1; b < s.n1; ++b) {
      std::size_t at = max_support(s.l1.at(a, b), pb.k0(), step_of1(pb, b));
      pb.checks[at].push_back({CheckKind::Hom1, a, b});
    }
  }
  for (std::size_t i = 0; i < s.n0; ++i) {
    for (std::size_t j = 0; j < s.n1; ++j) {
      std::size_t at = max_support(s.action.at(i, j), pb.k0(), step_of1(pb, j));
      pb.checks[at].push_back({CheckKind::Action, i, j});
    }
  }
  if (pb.pairing) {
    for (std::size_t a = 0; a < s.n1; ++a) {
      for (std::size_t b = 0; b < s.n0; ++b) {
        pb.checks[step_of1(pb, a)].push_back({CheckKind::Pair1, a, b});
      }
    }
  }
  for (auto& list : pb.checks) {
    std::stable_sort(list.begin(), list.end(), [](const Check& x, const Check& y) {
      auto rank = [](CheckKind k) {
        return k == CheckKind::Pair0 || k == CheckKind::Pair1 ? 1 : 0;
      };
      return rank(x.kind) < rank(y.kind);
    });
  }
}

struct State {
  std::vector<Vec> eta0;  // assigned columns
  std::vector<Vec> eta1;
  Echelon span0;
  Echelon span1;
  Echelon pair0;
  Echelon pair1;
};

bool is_isomorphism_modp(const ModP& f, const XModP& s, const XModP& t, const std::vector<Vec>& a1,
                         const std::vector<Vec>& a0) {
  auto full_rank = [&](const std::vector<Vec>& cols, std::size_t n) {
    Echelon e{n, {}, {}};
    for (const Vec& c : cols) {
      if (!e.independent(f, c)) {
        return false;
      }
      e.insert(f, c);
    }
    return e.rows.size() == n;
  };
  if (!full_rank(a1, t.n1) || !full_rank(a0, t.n0)) {
    return false;
  }
  for (std::size_t i = 0; i < s.n1; ++i) {
    for (std::size_t j = i + 1; j < s.n1; ++j) {
      if (apply(f, a1, s.l1.at(i, j), t.n1) != bilinear(f, t.l1, a1[i], a1[j])) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < s.n0; ++i) {
    for (std::size_t j = i + 1; j < s.n0; ++j) {
      if (apply(f, a0, s.l0.at(i, j), t.n0) != bilinear(f, t.l0, a0[i], a0[j])) {
        return false;
      }
    }
  }
  for (std::size_t j = 0; j < s.n1; ++j) {
    if (apply(f, a0, s.d[j], t.n0) != apply(f, t.d, a1[j], t.n0)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < s.n0; ++i) {
    for (std::size_t j = 0; j < s.n1; ++j) {
      if (apply(f, a1, s.action.at(i, j), t.n1) != bilinear(f, t.action, a0[i], a1[j])) {
        return false;
      }
    }
  }
  return true;
}

struct Leaf {
  std::vector<Vec> eta1;
  std::vector<Vec> eta0;
  std::vector<Vec> xi1;
  std::vector<Vec> xi0;
};

enum class Outcome { Found, Exhausted, Capped, Cancelled };

class Searcher {
 public:
  Searcher(const Problem& pb, u64 cap, const std::atomic<std::size_t>* stop_before,
           std::size_t branch)
      : pb_(pb), cap_(cap), stop_before_(stop_before), branch_(branch) {}

  // Explores the subtree where step 0 takes its `first`-th candidate (or the
  // whole tree when there are no steps).
  Outcome run(std::optional<Vec> first) {
    State st;
    st.span0 = Echelon{pb_.k0(), {}, {}};
    st.span1 = Echelon{pb_.k1(), {}, {}};
    st.pair0 = Echelon{pb_.m0, {}, {}};
    st.pair1 = Echelon{pb_.m1, {}, {}};
    if (pb_.steps() == 0) {
      return leaf(st) ? Outcome::Found : Outcome::Exhausted;
    }
    return place(st, 0, *first) ? Outcome::Found : outcome_;
  }

  u64 nodes() const { return nodes_; }
  const Leaf& found() const { return leaf_; }

 private:
  std::size_t width(std::size_t step) const { return step < pb_.k0() ? pb_.k0() : pb_.k1(); }

  bool aborted() {
    if (nodes_ > cap_) {
      outcome_ = Outcome::Capped;
      return true;
    }
    if (stop_before_ != nullptr && stop_before_->load(std::memory_order_relaxed) < branch_) {
      outcome_ = Outcome::Cancelled;
      return true;
    }
    return false;
  }

  // Tries candidate v at `step`; recurses on success.
  bool place(const State& parent, std::size_t step, const Vec& v) {
    const Echelon& span = step < pb_.k0() ? parent.span0 : parent.span1;
    if (!span.independent(pb_.f, v)) {
      return false;
    }
    ++nodes_;
    if (aborted()) {
      return false;
    }
    State st = parent;
    if (step < pb_.k0()) {
      st.eta0.push_back(v);
      st.span0.insert(pb_.f, v);
    } else {
      st.eta1.push_back(v);
      st.span1.insert(pb_.f, v);
    }
    for (const Check& c : pb_.checks[step]) {
      if (!check(st, c)) {
        return false;
      }
    }
    if (step + 1 == pb_.steps()) {
      return leaf(st);
    }
    const std::size_t n = width(step + 1);
    Vec cand(n, 0);
    while (next(cand)) {
      if (place(st, step + 1, cand)) {
        return true;
      }
      if (outcome_ == Outcome::Capped || outcome_ == Outcome::Cancelled) {
        return false;
      }
    }
    return false;
  }

  // Lexicographic successor with coordinate 0 most significant; false after
  // the last vector.
  bool next(Vec& v) const {
    for (std::size_t k = v.size(); k-- > 0;) {
      if (++v[k] < pb_.f.p) {
        return true;
      }
      v[k] = 0;
    }
    return false;
  }

  bool check(State& st, const Check& c) const {
    const ModP& f = pb_.f;
    const XModP& s = pb_.src;
    const XModP& t = pb_.dst;
    switch (c.kind) {
      case CheckKind::Hom0:
        return apply(f, st.eta0, s.l0.at(c.a, c.b), t.n0) ==
               bilinear(f, t.l0, st.eta0[c.a], st.eta0[c.b]);
      case CheckKind::Hom1:
        return apply(f, st.eta1, s.l1.at(c.a, c.b), t.n1) ==
               bilinear(f, t.l1, st.eta1[c.a], st.eta1[c.b]);
      case CheckKind::Boundary:
        return apply(f, st.eta0, s.d[c.a], t.n0) == apply(f, t.d, st.eta1[c.a], t.n0);
      case CheckKind::Action:
        return apply(f, st.eta1, s.action.at(c.a, c.b), t.n1) ==
               bilinear(f, t.action, st.eta0[c.a], st.eta1[c.b]);
      case CheckKind::Pair0: {
        Vec row = pb_.c0s.at(c.a, c.b);
        Vec img = bilinear(f, pb_.c0t, st.eta0[c.a], st.eta0[c.b]);
        row.insert(row.end(), img.begin(), img.end());
        return st.pair0.insert(f, std::move(row));
      }
      case CheckKind::Pair1: {
        Vec row = pb_.c1s.at(c.a, c.b);
        Vec img = bilinear(f, pb_.c1t, st.eta1[c.a], st.eta0[c.b]);
        row.insert(row.end(), img.begin(), img.end());
        return st.pair1.insert(f, std::move(row));
      }
    }
    return false;
  }

  bool leaf(const State& st) {
    Leaf l{st.eta1, st.eta0, {}, {}};
    if (pb_.pairing) {
      if (st.pair1.rows.size() != pb_.m1 || st.pair0.rows.size() != pb_.m0) {
        return false;
      }
      l.xi1 = st.pair1.solution(pb_.m1);
      l.xi0 = st.pair0.solution(pb_.m0);
      if (!is_isomorphism_modp(pb_.f, pb_.comm_src, pb_.comm_dst, l.xi1, l.xi0)) {
        return false;
      }
    }
    leaf_ = std::move(l);
    return true;
  }

  const Problem& pb_;
  u64 cap_;
  const std::atomic<std::size_t>* stop_before_;
  std::size_t branch_;
  u64 nodes_ = 0;
  Outcome outcome_ = Outcome::Exhausted;
  Leaf leaf_;
};

struct EngineResult {
  SearchStatus status = SearchStatus::None;
  Leaf leaf;
  u64 nodes = 0;
};

struct BranchResult {
  Outcome outcome = Outcome::Exhausted;
  u64 nodes = 0;
  Leaf leaf;
};

std::vector<Vec> top_candidates(const Problem& pb) {
  std::vector<Vec> out;
  if (pb.steps() == 0) {
    return out;
  }
  const std::size_t n = pb.k0() > 0 ? pb.k0() : pb.k1();
  Vec v(n, 0);
  for (;;) {
    std::size_t k = n;
    while (k-- > 0) {
      if (++v[k] < pb.f.p) {
        break;
      }
      v[k] = 0;
    }
    if (k == std::size_t(-1)) {
      break;
    }
    out.push_back(v);
  }
  return out;
}

// Runs every top-level branch (in parallel when jobs > 1) and replays the
// per-branch node counts in branch order, which reproduces the sequential
// search exactly.
EngineResult run_engine(const Problem& pb, u64 budget, unsigned jobs) {
  EngineResult res;
  if (pb.steps() == 0) {
    Searcher s(pb, budget, nullptr, 0);
    res.status = s.run(std::nullopt) == Outcome::Found ? SearchStatus::Found : SearchStatus::None;
    res.leaf = s.found();
    return res;
  }
  std::vector<Vec> tops = top_candidates(pb);
  std::vector<BranchResult> results(tops.size());
  if (jobs <= 1) {
    u64 used = 0;
    for (std::size_t b = 0; b < tops.size(); ++b) {
      Searcher s(pb, budget - used, nullptr, b);
      Outcome o = s.run(tops[b]);
      used += s.nodes();
      res.nodes = used;
      if (o == Outcome::Capped) {
        res.status = SearchStatus::BudgetExhausted;
        res.nodes = budget;
        return res;
      }
      if (o == Outcome::Found) {
        res.status = SearchStatus::Found;
        res.leaf = s.found();
        return res;
      }
    }
    res.status = SearchStatus::None;
    return res;
  }

  std::atomic<std::size_t> next_branch{0};
  std::atomic<std::size_t> first_found{tops.size()};
  auto worker = [&]() {
    for (;;) {
      std::size_t b = next_branch.fetch_add(1);
      if (b >= tops.size()) {
        return;
      }
      if (first_found.load() < b) {
        results[b].outcome = Outcome::Cancelled;
        continue;
      }
      Searcher s(pb, budget, &first_found, b);
      results[b].outcome = s.run(tops[b]);
      results[b].nodes = s.nodes();
      if (results[b].outcome == Outcome::Found) {
        results[b].leaf = s.found();
        std::size_t cur = first_found.load();
        while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned i = 0; i < jobs; ++i) {
    threads.emplace_back(worker);
  }
  for (std::thread& t : threads) {
    t.join();
  }
  u64 used = 0;
  for (std::size_t b = 0; b < tops.size(); ++b) {
    const BranchResult& r = results[b];
    if (r.outcome == Outcome::Capped || used + r.nodes > budget) {
      res.status = SearchStatus::BudgetExhausted;
      res.nodes = budget;
      return res;
    }
    used += r.nodes;
    res.nodes = used;
    if (r.outcome == Outcome::Found) {
      res.status = SearchStatus::Found;
      res.leaf = r.leaf;
      return res;
    }
    if (r.outcome == Outcome::Cancelled) {
      throw std::logic_error("search replay reached a cancelled branch");
    }
  }
  res.status = SearchStatus::None;
  return res;
}

Matrix to_matrix(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = Scalar(f, static_cast<long>(cols[c][r]));
    }
  }
  return m;
}

void require_finite(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw std::invalid_argument("search across different fields");
  }
  if (!a.is_finite()) {
    throw std::invalid_argument("search needs a finite field; refusing " + a.name());
  }
}

}  // namespace

IsoclinismSearchResult isoclinism_search(const CrossedModule& x, const CrossedModule& y,
                                         const SearchOptions& options) {
  require_finite(x.field(), y.field());
  IsoclinismSearchResult out;
  if (options.use_fingerprint) {
    std::string diff = fingerprint(x).first_difference(fingerprint(y));
    if (!diff.empty()) {
      out.status = SearchStatus::None;
      out.detail = "fingerprint: " + diff + " differs";
      return out;
    }
  }
  CommutatorPairing px = commutator_pairing(x);
  CommutatorPairing py = commutator_pairing(y);
  if (px.k1 != py.k1 || px.k0 != py.k0 || px.m1() != py.m1() || px.m0() != py.m0()) {
    out.status = SearchStatus::None;
    out.detail = "dimensions of central quotients or commutators differ";
    return out;
  }
  Problem pb;
  pb.f = ModP{static_cast<u32>(x.field().modulus())};
  pb.src = to_modp(px.central.quotient);
  pb.dst = to_modp(py.central.quotient);
  pb.pairing = true;
  pb.m1 = px.m1();
  pb.m0 = px.m0();
  pb.c1s = pairing_table(px.c1, px.k1, px.k0, pb.m1);
  pb.c1t = pairing_table(py.c1, py.k1, py.k0, pb.m1);
  pb.c0s = pairing_table(px.c0, px.k0, px.k0, pb.m0);
  pb.c0t = pairing_table(py.c0, py.k0, py.k0, pb.m0);
  pb.comm_src = to_modp(px.commutator_module);
  pb.comm_dst = to_modp(py.commutator_module);
  schedule(pb);

  EngineResult r = run_engine(pb, options.budget, options.jobs);
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status == SearchStatus::BudgetExhausted) {
    out.detail = "budget of " + std::to_string(options.budget) + " nodes exhausted";
    return out;
  }
  if (r.status == SearchStatus::None) {
    out.detail = "search space exhausted";
    return out;
  }
  const Field f = x.field();
  out.witness.eta = XModMorphism{to_matrix(f, px.k1, r.leaf.eta1), to_matrix(f, px.k0, r.leaf.eta0)};
  out.witness.xi = XModMorphism{to_matrix(f, pb.m1, r.leaf.xi1), to_matrix(f, pb.m0, r.leaf.xi0)};
  IsoclinismVerdict v = isoclinism_verify(px, py, out.witness);
  if (!v.verified) {
    throw std::logic_error("search produced a witness that fails exact verification: " +
                           v.violation);
  }
  out.witness.verified = true;
  out.detail = "witness found";
  return out;
}

IsomorphismSearchResult xmod_isomorphism_search(const CrossedModule& x, const CrossedModule& y,
                                                const SearchOptions& options) {
  require_finite(x.field(), y.field());
  IsomorphismSearchResult out;
  if (x.dim1() != y.dim1() || x.dim0() != y.dim0()) {
    out.detail = "dimensions differ";
    return out;
  }
  Problem pb;
  pb.f = ModP{static_cast<u32>(x.field().modulus())};
  pb.src = to_modp(x);
  pb.dst = to_modp(y);
  schedule(pb);
  EngineResult r = run_engine(pb, options.budget, options.jobs);
  out.status = r.status;
  out.nodes = r.nodes;
  if (r.status != SearchStatus::Found) {
    out.detail = r.status == SearchStatus::None ? "search space exhausted" : "budget exhausted";
    return out;
  }
  const Field f = x.field();
  out.iso = XModMorphism{to_matrix(f, x.dim1(), r.leaf.eta1), to_matrix(f, x.dim0(), r.leaf.eta0)};
  if (!is_isomorphism(x, y, out.iso)) {
    throw std::logic_error("search produced a map that is not an isomorphism");
  }
  out.detail = "isomorphism found";
  return out;
}

IsomorphismSearchResult lie_isomorphism_search(const LieAlgebra& g, const LieAlgebra& h,
                                               const SearchOptions& options) {
  auto wrap = [](const LieAlgebra& a) {
    return CrossedModule(XModData{LieData::zero(a.field(), 0), a.data(), Matrix(a.field(), a.dim(), 0), {}});
  };
  return xmod_isomorphism_search(wrap(g), wrap(h), options);
}

}  // namespace xlie
