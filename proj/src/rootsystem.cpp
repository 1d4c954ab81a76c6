#include "chevlie/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "json.hpp"

namespace chevlie {

namespace {

// Simple roots in an ambient integer lattice, all coordinates doubled so the
// half-integer entries of E-type stay integral.
std::vector<std::vector<int>> simple_roots_euclidean(char type, uint32_t n) {
  auto chain = [](uint32_t n, uint32_t dim) {
    std::vector<std::vector<int>> s(n, std::vector<int>(dim, 0));
    for (uint32_t i = 0; i + 1 < n; ++i) {
      s[i][i] = 2;
      s[i][i + 1] = -2;
    }
    return s;
  };
  switch (type) {
    case 'A': {
      auto s = chain(n, n + 1);
      s[n - 1][n - 1] = 2;
      s[n - 1][n] = -2;
      return s;
    }
    case 'B': {
      auto s = chain(n, n);
      s[n - 1][n - 1] = 2;
      return s;
    }
    case 'C': {
      auto s = chain(n, n);
      s[n - 1][n - 1] = 4;
      return s;
    }
    case 'D': {
      auto s = chain(n, n);
      s[n - 1][n - 2] = 2;
      s[n - 1][n - 1] = 2;
      return s;
    }
    case 'E': {
      std::vector<std::vector<int>> e8 = {
          {1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0},
          {-2, 2, 0, 0, 0, 0, 0, 0},      {0, -2, 2, 0, 0, 0, 0, 0},
          {0, 0, -2, 2, 0, 0, 0, 0},      {0, 0, 0, -2, 2, 0, 0, 0},
          {0, 0, 0, 0, -2, 2, 0, 0},      {0, 0, 0, 0, 0, -2, 2, 0}};
      e8.resize(n);
      return e8;
    }
    case 'F':
      return {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    case 'G':
      return {{2, -2, 0}, {-4, 2, 2}};
    default:
      throw RootSystemError("unsupported type");
  }
}

uint32_t expected_root_count(char type, uint32_t n) {
  switch (type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

long long exact_div(long long a, long long b) {
  assert(b != 0 && a % b == 0);
  return a / b;
}

std::vector<uint32_t> prime_factor_set(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw RootSystemError("bad type label: " + label);
  char t = label[0];
  uint32_t r = 0;
  for (size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9')
      throw RootSystemError("bad type label: " + label);
    r = r * 10 + (uint32_t)(label[i] - '0');
  }
  return build(t, r);
}

RootSystem RootSystem::build(char type, uint32_t rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1 && rank <= 8; break;
    case 'B': ok = rank >= 2 && rank <= 8; break;
    case 'C': ok = rank >= 3 && rank <= 8; break;
    case 'D': ok = rank >= 4 && rank <= 8; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw RootSystemError("unsupported root system " + std::string(1, type) +
                          std::to_string(rank));

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;

  // Gram matrix from the Euclidean model, renormalized so short simple
  // roots have squared length 2.
  auto se = simple_roots_euclidean(type, rank);
  auto raw = [&](uint32_t i, uint32_t j) {
    long long s = 0;
    for (size_t k = 0; k < se[i].size(); ++k)
      s += (long long)se[i][k] * se[j][k];
    return s;
  };
  long long min_len = raw(0, 0);
  for (uint32_t i = 1; i < rank; ++i) min_len = std::min(min_len, raw(i, i));
  rs.gram_.assign(rank, std::vector<long long>(rank, 0));
  for (uint32_t i = 0; i < rank; ++i)
    for (uint32_t j = 0; j < rank; ++j)
      rs.gram_[i][j] = exact_div(2 * raw(i, j), min_len);

  rs.d_.resize(rank);
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (uint32_t i = 0; i < rank; ++i) {
    rs.d_[i] = (int)exact_div(rs.gram_[i][i], 2);
    for (uint32_t j = 0; j < rank; ++j)
      rs.cartan_[i][j] = (int)exact_div(rs.gram_[i][j], rs.d_[i]);
  }

  // Close the simple roots under simple reflections.
  std::set<RootVec> seen;
  std::vector<RootVec> work;
  for (uint32_t i = 0; i < rank; ++i) {
    RootVec v(rank, 0);
    v[i] = 1;
    seen.insert(v);
    work.push_back(v);
  }
  while (!work.empty()) {
    RootVec v = work.back();
    work.pop_back();
    for (uint32_t i = 0; i < rank; ++i) {
      long long pair = 0;
      for (uint32_t j = 0; j < rank; ++j)
        pair += (long long)rs.cartan_[i][j] * v[j];
      RootVec w = v;
      w[i] = (int)(w[i] - pair);
      if (seen.insert(w).second) work.push_back(w);
    }
  }
  if (seen.size() != expected_root_count(type, rank))
    throw RootSystemError("reflection closure produced the wrong root count");

  std::vector<RootVec> pos;
  for (const auto& v : seen) {
    bool nonneg = true, nonpos = true;
    for (int c : v) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (nonneg == nonpos)
      throw RootSystemError("root has mixed signs over the simple roots");
    if (nonneg) pos.push_back(v);
  }
  auto ht = [](const RootVec& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const RootVec& x, const RootVec& y) {
    int hx = ht(x), hy = ht(y);
    if (hx != hy) return hx < hy;
    return x > y;  // descending lex tiebreak
  });
  rs.n_pos_ = (uint32_t)pos.size();
  rs.roots_ = pos;
  for (const auto& v : pos) {
    RootVec m(v.size());
    for (size_t k = 0; k < v.size(); ++k) m[k] = -v[k];
    rs.roots_.push_back(std::move(m));
  }
  for (uint32_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i]] = i;
  return rs;
}

int RootSystem::height(uint32_t i) const {
  int h = 0;
  for (int c : roots_[i]) h += c;
  return h;
}

uint32_t RootSystem::index_of(const RootVec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw RootSystemError("not a root of " + label());
  return it->second;
}

std::optional<uint32_t> RootSystem::sum(uint32_t i, uint32_t j) const {
  RootVec s = roots_[i];
  for (size_t k = 0; k < s.size(); ++k) s[k] += roots_[j][k];
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long long RootSystem::form(const RootVec& x, const RootVec& y) const {
  long long s = 0;
  for (uint32_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < rank_; ++j)
      s += (long long)x[i] * y[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::pairing(const RootVec& gamma, uint32_t delta) const {
  if (gamma.size() != rank_) throw RootSystemError("foreign root");
  const RootVec& d = roots_[delta];
  return (int)exact_div(2 * form(gamma, d), form(d, d));
}

int RootSystem::pairing(uint32_t gamma, uint32_t delta) const {
  return pairing(roots_[gamma], delta);
}

uint32_t RootSystem::reflect(uint32_t delta, uint32_t gamma) const {
  int p = pairing(gamma, delta);
  RootVec v = roots_[gamma];
  for (uint32_t k = 0; k < rank_; ++k) v[k] -= p * roots_[delta][k];
  return index_of(v);
}

Cochar RootSystem::coroot(uint32_t gamma) const {
  const RootVec& v = roots_[gamma];
  long long dg = exact_div(form(v, v), 2);
  Cochar c(rank_);
  for (uint32_t i = 0; i < rank_; ++i)
    c[i] = exact_div((long long)v[i] * d_[i], dg);
  return c;
}

long long RootSystem::cochar_pairing(const RootVec& gamma,
                                     const Cochar& lam) const {
  if (gamma.size() != rank_ || lam.size() != rank_)
    throw RootSystemError("foreign data");
  long long s = 0;
  for (uint32_t i = 0; i < rank_; ++i) {
    if (lam[i] == 0) continue;
    long long pi = 0;  // <gamma, alpha_i^vee>
    for (uint32_t j = 0; j < rank_; ++j)
      pi += (long long)cartan_[i][j] * gamma[j];
    s += lam[i] * pi;
  }
  return s;
}

long long RootSystem::cochar_pairing(uint32_t gamma, const Cochar& lam) const {
  return cochar_pairing(roots_[gamma], lam);
}

Cochar RootSystem::coroot_reflect(uint32_t delta, const Cochar& lam) const {
  long long p = cochar_pairing(delta, lam);
  Cochar dv = coroot(delta);
  Cochar r = lam;
  for (uint32_t i = 0; i < rank_; ++i) r[i] -= p * dv[i];
  return r;
}

std::vector<long long> RootSystem::cochar_weights(const Cochar& lam) const {
  std::vector<long long> w(n_roots());
  for (uint32_t i = 0; i < n_roots(); ++i) w[i] = cochar_pairing(i, lam);
  return w;
}

PrimeClassification RootSystem::classify_primes() const {
  std::set<uint32_t> bad;
  for (uint32_t i = 0; i < n_pos_; ++i)
    for (int c : roots_[i])
      if (c > 1)
        for (uint32_t p : prime_factor_set((uint32_t)c)) bad.insert(p);
  PrimeClassification pc;
  pc.type = type_;
  pc.rank = rank_;
  pc.bad.assign(bad.begin(), bad.end());
  return pc;
}

bool PrimeClassification::good(uint32_t p) const {
  return std::find(bad.begin(), bad.end(), p) == bad.end();
}

bool PrimeClassification::very_good(uint32_t p) const {
  if (!good(p)) return false;
  if (type == 'A' && (rank + 1) % p == 0) return false;
  return true;
}

std::vector<uint32_t> PrimeClassification::extra_non_very_good() const {
  std::vector<uint32_t> extra;
  if (type == 'A')
    for (uint32_t p : prime_factor_set(rank + 1))
      if (good(p)) extra.push_back(p);
  return extra;
}

bool RootSystem::is_closed_subsystem(
    const std::vector<uint32_t>& subset) const {
  std::set<uint32_t> s(subset.begin(), subset.end());
  for (uint32_t i : s) {
    if (i >= n_roots()) throw RootSystemError("root index out of range");
    if (!s.count(neg(i)))
      throw RootSystemError("subset is not symmetric: missing -" +
                            root_name(i));
  }
  for (uint32_t i : s)
    for (uint32_t j : s) {
      auto k = sum(i, j);
      if (k && !s.count(*k)) return false;
    }
  return true;
}

std::string RootSystem::root_name(const RootVec& v) const {
  bool nonneg = true;
  for (int c : v)
    if (c < 0) nonneg = false;
  if (!nonneg) {
    RootVec m(v.size());
    int terms = 0;
    for (size_t k = 0; k < v.size(); ++k) {
      m[k] = -v[k];
      if (m[k] != 0) ++terms;
    }
    std::string inner = root_name(m);
    return terms > 1 ? "-(" + inner + ")" : "-" + inner;
  }
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[k] != 1) s += std::to_string(v[k]);
    s += (char)('a' + k);
  }
  return s.empty() ? "0" : s;
}

std::string RootSystem::root_name(uint32_t i) const {
  return root_name(roots_[i]);
}

// ---------------------------------------------------------------------------

namespace {

std::string pad_left(const std::string& s, size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string int_matrix_block(const std::vector<std::vector<int>>& m,
                             const std::string& indent) {
  size_t w = 1;
  for (const auto& row : m)
    for (int x : row) w = std::max(w, std::to_string(x).size());
  std::string out;
  for (const auto& row : m) {
    out += indent;
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += pad_left(std::to_string(row[j]), w);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string rootsys_text(const RootSystem& rs) {
  std::ostringstream o;
  o << "root system " << rs.label() << "\n";
  o << "rank " << rs.rank() << "\n";
  o << "roots " << rs.n_roots() << " (" << rs.n_pos() << " positive)\n";
  o << "cartan matrix C[i][j] = <a_j, a_i^vee>:\n";
  std::vector<std::vector<int>> cm(rs.rank(), std::vector<int>(rs.rank()));
  for (uint32_t i = 0; i < rs.rank(); ++i)
    for (uint32_t j = 0; j < rs.rank(); ++j) cm[i][j] = rs.cartan(i, j);
  o << int_matrix_block(cm, "  ");
  o << "symmetrizer d:";
  for (uint32_t i = 0; i < rs.rank(); ++i) o << " " << rs.sym_d(i);
  o << "\n";
  auto pc = rs.classify_primes();
  o << "bad primes:";
  if (pc.bad.empty()) o << " (none)";
  for (uint32_t p : pc.bad) o << " " << p;
  o << "\n";
  o << "roots (index: coords  name  height  length2):\n";
  size_t namew = 1;
  for (uint32_t i = 0; i < rs.n_roots(); ++i)
    namew = std::max(namew, rs.root_name(i).size());
  size_t idxw = std::to_string(rs.n_roots() - 1).size();
  size_t cw = 1;
  for (uint32_t i = 0; i < rs.n_roots(); ++i)
    for (int c : rs.root(i)) cw = std::max(cw, std::to_string(c).size());
  for (uint32_t i = 0; i < rs.n_roots(); ++i) {
    o << "  " << pad_left(std::to_string(i), idxw) << ": [";
    const auto& v = rs.root(i);
    for (size_t k = 0; k < v.size(); ++k) {
      if (k) o << " ";
      o << pad_left(std::to_string(v[k]), cw);
    }
    o << "]  " << pad_right(rs.root_name(i), namew) << "  "
      << pad_left(std::to_string(rs.height(i)), 2) << "  " << rs.length2(i)
      << "\n";
  }
  if (rs.n_pos() <= 12) {
    o << "pairing <row, col^vee> over positive roots:\n";
    std::vector<std::vector<int>> pm(rs.n_pos(), std::vector<int>(rs.n_pos()));
    for (uint32_t i = 0; i < rs.n_pos(); ++i)
      for (uint32_t j = 0; j < rs.n_pos(); ++j) pm[i][j] = rs.pairing(i, j);
    o << int_matrix_block(pm, "  ");
  } else {
    o << "pairing matrix omitted (more than 12 positive roots); "
         "use --format json\n";
  }
  return o.str();
}

std::string rootsys_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["type"] = rs.label();
  j["rank"] = rs.rank();
  j["n_roots"] = rs.n_roots();
  j["n_positive"] = rs.n_pos();
  std::vector<std::vector<int>> cm(rs.rank(), std::vector<int>(rs.rank()));
  for (uint32_t i = 0; i < rs.rank(); ++i)
    for (uint32_t a = 0; a < rs.rank(); ++a) cm[i][a] = rs.cartan(i, a);
  j["cartan"] = cm;
  std::vector<int> d(rs.rank());
  for (uint32_t i = 0; i < rs.rank(); ++i) d[i] = rs.sym_d(i);
  j["symmetrizer"] = d;
  j["roots"] = nlohmann::ordered_json::array();
  for (uint32_t i = 0; i < rs.n_roots(); ++i) {
    nlohmann::ordered_json r;
    r["index"] = i;
    r["coords"] = rs.root(i);
    r["name"] = rs.root_name(i);
    r["height"] = rs.height(i);
    r["length2"] = rs.length2(i);
    j["roots"].push_back(r);
  }
  std::vector<std::vector<int>> pm(rs.n_roots(),
                                   std::vector<int>(rs.n_roots()));
  for (uint32_t i = 0; i < rs.n_roots(); ++i)
    for (uint32_t k = 0; k < rs.n_roots(); ++k) pm[i][k] = rs.pairing(i, k);
  j["pairing"] = pm;
  auto pc = rs.classify_primes();
  j["primes"]["bad"] = pc.bad;
  j["primes"]["extra_non_very_good"] = pc.extra_non_very_good();
  return j.dump(2) + "\n";
}

std::string primes_text(const RootSystem& rs) {
  auto pc = rs.classify_primes();
  std::ostringstream o;
  o << "root system " << rs.label() << "\n";
  o << "bad primes:";
  if (pc.bad.empty()) o << " (none)";
  for (uint32_t p : pc.bad) o << " " << p;
  o << "\n";
  auto extra = pc.extra_non_very_good();
  o << "very good excludes additionally:";
  if (extra.empty()) o << " (none)";
  for (uint32_t p : extra) o << " " << p;
  o << "\n";
  return o.str();
}

}  // namespace chevlie
