#include "ncl/oracle/enumerate.hpp"

#include <map>
#include <mutex>

#include "ncl/error.hpp"

namespace ncl::oracle {

using logic::Quantification;
using logic::Scheme;

namespace {

bool edge(uint64_t rel, int n, int u, int v) { return (rel >> (u * n + v)) & 1; }

[[noreturn]] void too_large(const std::string& what) {
  throw Error(ErrorCode::BudgetExceeded, what + " exceeds the enumeration budget");
}

}  // namespace

bool frame_holds(Scheme s, uint64_t rel, int n) {
  auto R = [&](int u, int v) { return edge(rel, n, u, v); };
  switch (s) {
    case Scheme::K:
      return true;
    case Scheme::T:
      for (int u = 0; u < n; ++u)
        if (!R(u, u)) return false;
      return true;
    case Scheme::B:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (R(u, v) && !R(v, u)) return false;
      return true;
    case Scheme::D:
      for (int u = 0; u < n; ++u) {
        bool any = false;
        for (int v = 0; v < n; ++v) any = any || R(u, v);
        if (!any) return false;
      }
      return true;
    case Scheme::Four:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w)
            if (R(u, v) && R(v, w) && !R(u, w)) return false;
      return true;
    case Scheme::Five:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w)
            if (R(u, v) && R(u, w) && !R(v, w)) return false;
      return true;
    case Scheme::CD:
      for (int u = 0; u < n; ++u) {
        int count = 0;
        for (int v = 0; v < n; ++v) count += R(u, v);
        if (count > 1) return false;
      }
      return true;
    case Scheme::C4:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (!R(u, v)) continue;
          bool between = false;
          for (int z = 0; z < n; ++z) between = between || (R(u, z) && R(z, v));
          if (!between) return false;
        }
      return true;
    case Scheme::Universal:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (!R(u, v)) return false;
      return true;
  }
  return false;
}

std::vector<uint64_t> frame_relations(const logic::SchemeSet& schemes, int n) {
  if (n > 4) too_large("relation enumeration on " + std::to_string(n) + " worlds");
  std::vector<uint64_t> out;
  uint64_t count = uint64_t{1} << (n * n);
  for (uint64_t rel = 0; rel < count; ++rel) {
    bool ok = true;
    for (Scheme s : schemes) ok = ok && frame_holds(s, rel, n);
    if (ok) out.push_back(rel);
  }
  return out;
}

bool cj_condition(char which, const ObTable& ob, int n) {
  const uint64_t sets = uint64_t{1} << n;
  auto O = [&](uint64_t x, uint64_t y) { return (ob[x] >> y) & 1; };
  auto subset = [](uint64_t a, uint64_t b) { return (a & ~b) == 0; };
  switch (which) {
    case 'a':
      for (uint64_t x = 0; x < sets; ++x)
        if (O(x, 0)) return false;
      return true;
    case 'b':
      for (uint64_t x = 0; x < sets; ++x)
        for (uint64_t y = 0; y < sets; ++y)
          for (uint64_t z = 0; z < sets; ++z)
            if ((x & y) == (x & z) && O(x, y) != O(x, z)) return false;
      return true;
    case 'c':
      for (uint64_t x = 0; x < sets; ++x)
        for (uint64_t y = 0; y < sets; ++y)
          for (uint64_t z = 0; z < sets; ++z)
            if ((x & y & z) != 0 && O(x, y) && O(x, z) && !O(x, y & z)) return false;
      return true;
    case 'd':
      for (uint64_t x = 0; x < sets; ++x)
        for (uint64_t y = 0; y < sets; ++y)
          for (uint64_t z = 0; z < sets; ++z)
            if (subset(y, x) && O(x, y) && subset(x, z) && !O(z, (z & ~x) | y)) return false;
      return true;
    case 'e':
      for (uint64_t x = 0; x < sets; ++x)
        for (uint64_t y = 0; y < sets; ++y)
          for (uint64_t z = 0; z < sets; ++z)
            if (subset(y, x) && O(x, z) && (y & z) != 0 && !O(y, z)) return false;
      return true;
    default:
      return false;
  }
}

bool cj_conditions(const ObTable& ob, int n) {
  for (char c : {'a', 'b', 'c', 'd', 'e'})
    if (!cj_condition(c, ob, n)) return false;
  return true;
}

const std::vector<ObTable>& cj_tables(int n) {
  if (n < 1 || n > 3) too_large("ob-table enumeration on " + std::to_string(n) + " worlds");
  static std::map<int, std::vector<ObTable>> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // By (b) ob(X, Y) only depends on X & Y, and by (a) it fails when X & Y
  // is empty, so each context X picks a family of non-empty subsets of X.
  const uint64_t sets = uint64_t{1} << n;
  std::vector<std::vector<uint64_t>> subsets(sets);
  for (uint64_t x = 0; x < sets; ++x)
    for (uint64_t s = 1; s < sets; ++s)
      if ((s & ~x) == 0) subsets[x].push_back(s);
  std::vector<uint64_t> choice(sets, 0);
  std::vector<ObTable> out;
  ObTable ob(sets, 0);
  for (;;) {
    for (uint64_t x = 0; x < sets; ++x) {
      uint64_t row = 0;
      for (uint64_t y = 0; y < sets; ++y) {
        uint64_t meet = x & y;
        for (std::size_t k = 0; k < subsets[x].size(); ++k)
          if (((choice[x] >> k) & 1) && subsets[x][k] == meet) row |= uint64_t{1} << y;
      }
      ob[x] = row;
    }
    if (cj_condition('c', ob, n) && cj_condition('d', ob, n) && cj_condition('e', ob, n))
      out.push_back(ob);
    uint64_t x = 0;
    for (; x < sets; ++x) {
      if (++choice[x] < (uint64_t{1} << subsets[x].size())) break;
      choice[x] = 0;
    }
    if (x == sets) break;
  }
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// Flat odometer digit: which model field it drives.
enum class Field { Nominal, Better, Ob, Function, Valuation };

struct Digit {
  Field field;
  int a = 0;
  std::size_t b = 0;
  uint64_t base = 1;
};

class Enumerator {
 public:
  Enumerator(const Vocabulary& v, const Bounds& b, const ModelVisitor& visit)
      : v_(v), b_(b), visit_(visit) {}

  uint64_t run() {
    for (int n = b_.min_worlds; n <= b_.max_worlds && !stopped_; ++n) {
      if (n < 1 || n > kMaxWorlds) too_large("a model with " + std::to_string(n) + " worlds");
      m_ = FiniteModel{};
      m_.worlds = n;
      m_.domain.assign(v_.sorts.size(), 1);
      domains(0);
    }
    return visited_;
  }

 private:
  void domains(std::size_t s) {
    if (stopped_) return;
    if (s == v_.sorts.size()) {
      relation_lists_.clear();
      for (const auto& r : v_.relations) relation_lists_.push_back(&relations_for(r.schemes));
      m_.relations.assign(v_.relations.size(), 0);
      relations(0);
      return;
    }
    for (int d = 1; d <= b_.max_domain && !stopped_; ++d) {
      m_.domain[s] = d;
      domains(s + 1);
    }
  }

  const std::vector<uint64_t>& relations_for(const logic::SchemeSet& schemes) {
    auto key = std::make_pair(m_.worlds, schemes);
    auto it = frames_.find(key);
    if (it == frames_.end()) it = frames_.emplace(key, frame_relations(schemes, m_.worlds)).first;
    return it->second;
  }

  void relations(std::size_t r) {
    if (stopped_) return;
    if (r == v_.relations.size()) {
      m_.exists.assign(v_.sorts.size(), {});
      existence(0);
      return;
    }
    for (uint64_t rel : *relation_lists_[r]) {
      m_.relations[r] = rel;
      relations(r + 1);
      if (stopped_) return;
    }
  }

  // Allowed existence masks of one individual under the sort's semantics.
  bool individual_ok(WorldSet mask, Quantification q) const {
    if (q != Quantification::Cumulative && q != Quantification::Decreasing) return true;
    int n = m_.worlds;
    for (uint64_t rel : m_.relations)
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
          if (!edge(rel, n, u, w)) continue;
          bool from = (mask >> u) & 1, to = (mask >> w) & 1;
          if (q == Quantification::Cumulative ? (from && !to) : (to && !from)) return false;
        }
    return true;
  }

  void existence(std::size_t s) {
    if (stopped_) return;
    if (s == v_.sorts.size()) {
      flat();
      return;
    }
    const int d = m_.domain[s];
    const WorldSet all = m_.all();
    if (!v_.sorts[s].guarded()) {
      m_.exists[s].assign(d, all);
      existence(s + 1);
      return;
    }
    std::vector<WorldSet> masks;
    for (WorldSet mask = 0; mask <= all; ++mask)
      if (individual_ok(mask, v_.sorts[s].quantification)) masks.push_back(mask);
    std::vector<std::size_t> pick(d, 0);
    m_.exists[s].assign(d, 0);
    for (;;) {
      WorldSet cover = 0;
      for (int i = 0; i < d; ++i) cover |= m_.exists[s][i] = masks[pick[i]];
      if (cover == all) existence(s + 1);
      if (stopped_) return;
      int i = d - 1;
      for (; i >= 0; --i) {
        if (++pick[i] < masks.size()) break;
        pick[i] = 0;
      }
      if (i < 0) break;
    }
  }

  void flat() {
    const int n = m_.worlds;
    std::vector<Digit> digits;
    m_.nominals.assign(v_.nominals.size(), 0);
    for (std::size_t i = 0; i < v_.nominals.size(); ++i)
      digits.push_back({Field::Nominal, static_cast<int>(i), 0, static_cast<uint64_t>(n)});
    m_.better = 0;
    m_.ob.clear();
    const std::vector<ObTable>* obs = nullptr;
    if (v_.logic.family == Family::Ddl) {
      if (v_.logic.ddl.system == logic::DdlSystem::AqvistE) {
        if (n > 4) too_large("betterness enumeration on " + std::to_string(n) + " worlds");
        digits.push_back({Field::Better, 0, 0, uint64_t{1} << (n * n)});
      } else {
        obs = &cj_tables(n);
        if (obs->empty()) return;
        digits.push_back({Field::Ob, 0, 0, obs->size()});
        m_.ob = (*obs)[0];
      }
    }
    m_.functions.assign(v_.functions.size(), {});
    for (std::size_t f = 0; f < v_.functions.size(); ++f) {
      std::size_t count = tuple_count(m_, v_.functions[f]);
      m_.functions[f].assign(count, 0);
      for (std::size_t t = 0; t < count; ++t)
        digits.push_back({Field::Function, static_cast<int>(f), t,
                          static_cast<uint64_t>(m_.domain[v_.functions[f].result])});
    }
    m_.valuation.assign(v_.predicates.size(), {});
    for (std::size_t p = 0; p < v_.predicates.size(); ++p) {
      std::size_t count = tuple_count(m_, v_.predicates[p]);
      m_.valuation[p].assign(count, 0);
      for (std::size_t t = 0; t < count; ++t)
        digits.push_back({Field::Valuation, static_cast<int>(p), t, uint64_t{1} << n});
    }

    std::vector<uint64_t> value(digits.size(), 0);
    for (;;) {
      if (++visited_ > b_.max_models)
        too_large("model enumeration (" + std::to_string(b_.max_models) + " models)");
      if (!visit_(m_)) {
        stopped_ = true;
        return;
      }
      std::size_t i = digits.size();
      while (i-- > 0) {
        if (++value[i] < digits[i].base) {
          set(digits[i], value[i], obs);
          break;
        }
        value[i] = 0;
        set(digits[i], 0, obs);
      }
      if (i == static_cast<std::size_t>(-1)) return;
    }
  }

  void set(const Digit& d, uint64_t value, const std::vector<ObTable>* obs) {
    switch (d.field) {
      case Field::Nominal: m_.nominals[d.a] = static_cast<int>(value); break;
      case Field::Better: m_.better = value; break;
      case Field::Ob: m_.ob = (*obs)[value]; break;
      case Field::Function: m_.functions[d.a][d.b] = static_cast<int>(value); break;
      case Field::Valuation: m_.valuation[d.a][d.b] = static_cast<WorldSet>(value); break;
    }
  }

  const Vocabulary& v_;
  const Bounds& b_;
  const ModelVisitor& visit_;
  FiniteModel m_;
  std::map<std::pair<int, logic::SchemeSet>, std::vector<uint64_t>> frames_;
  std::vector<const std::vector<uint64_t>*> relation_lists_;
  uint64_t visited_ = 0;
  bool stopped_ = false;
};

}  // namespace

uint64_t enumerate_models(const Vocabulary& vocabulary, const Bounds& bounds,
                          const ModelVisitor& visit) {
  return Enumerator(vocabulary, bounds, visit).run();
}

}  // namespace ncl::oracle
