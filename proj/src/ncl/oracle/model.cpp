#include "ncl/oracle/model.hpp"

#include <sstream>

namespace ncl::oracle {

std::size_t tuple_count(const FiniteModel& m, const Symbol& sym) {
  std::size_t n = 1;
  for (int s : sym.args) n *= static_cast<std::size_t>(m.domain[s]);
  return n;
}

std::size_t tuple_index(const FiniteModel& m, const Symbol& sym, const std::vector<int>& args) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < args.size(); ++k) i = i * m.domain[sym.args[k]] + args[k];
  return i;
}

namespace {

std::string world_name(int w) { return "w" + std::to_string(w); }

std::string world_set(WorldSet s, int n) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < n; ++w) {
    if (!((s >> w) & 1)) continue;
    if (!first) out += ",";
    out += world_name(w);
    first = false;
  }
  return out + "}";
}

std::string pairs(uint64_t rel, int n) {
  std::string out = "{";
  bool first = true;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!((rel >> (u * n + v)) & 1)) continue;
      if (!first) out += ",";
      out += "(" + world_name(u) + "," + world_name(v) + ")";
      first = false;
    }
  return out + "}";
}

std::string individual(const Vocabulary& v, int sort, int d) {
  std::string s = v.sorts[sort].name;
  if (!s.empty() && s[0] == '$') s = s.substr(1);
  return s + std::to_string(d);
}

std::string tuple_text(const FiniteModel& m, const Vocabulary& v, const Symbol& sym, std::size_t t) {
  std::vector<std::string> parts(sym.args.size());
  for (std::size_t k = sym.args.size(); k-- > 0;) {
    int size = m.domain[sym.args[k]];
    parts[k] = individual(v, sym.args[k], static_cast<int>(t % size));
    t /= size;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + parts[k];
  return out;
}

}  // namespace

std::string describe(const FiniteModel& m, const Vocabulary& v) {
  std::ostringstream out;
  out << "worlds: " << world_set(m.all(), m.worlds) << "\n";
  for (std::size_t r = 0; r < m.relations.size() && r < v.relations.size(); ++r) {
    std::string name = v.relations[r].index.empty() ? "R" : "R" + v.relations[r].index;
    out << name << ": " << pairs(m.relations[r], m.worlds) << "\n";
  }
  for (std::size_t s = 0; s < m.domain.size(); ++s) {
    out << "domain " << v.sorts[s].name << ": {";
    for (int d = 0; d < m.domain[s]; ++d) out << (d ? "," : "") << individual(v, static_cast<int>(s), d);
    out << "}\n";
    if (v.sorts[s].guarded())
      for (int d = 0; d < m.domain[s]; ++d)
        out << "  exists " << individual(v, static_cast<int>(s), d) << ": "
            << world_set(m.exists[s][d], m.worlds) << "\n";
  }
  for (std::size_t n = 0; n < m.nominals.size(); ++n)
    out << v.nominals[n] << " = " << world_name(m.nominals[n]) << "\n";
  for (std::size_t f = 0; f < m.functions.size(); ++f) {
    const Symbol& sym = v.functions[f];
    for (std::size_t t = 0; t < m.functions[f].size(); ++t) {
      out << sym.name;
      if (!sym.args.empty()) out << "(" << tuple_text(m, v, sym, t) << ")";
      out << " = " << individual(v, sym.result, m.functions[f][t]) << "\n";
    }
  }
  for (std::size_t p = 0; p < m.valuation.size(); ++p) {
    const Symbol& sym = v.predicates[p];
    for (std::size_t t = 0; t < m.valuation[p].size(); ++t) {
      out << sym.name;
      if (!sym.args.empty()) out << "(" << tuple_text(m, v, sym, t) << ")";
      out << " holds at " << world_set(m.valuation[p][t], m.worlds) << "\n";
    }
  }
  if (v.logic.family == Family::Ddl && v.logic.ddl.system == logic::DdlSystem::AqvistE)
    out << "better: " << pairs(m.better, m.worlds) << "\n";
  if (!m.ob.empty()) {
    for (std::size_t x = 0; x < m.ob.size(); ++x)
      for (std::size_t y = 0; y < m.ob.size(); ++y)
        if ((m.ob[x] >> y) & 1)
          out << "ob(" << world_set(static_cast<WorldSet>(x), m.worlds) << ", "
              << world_set(static_cast<WorldSet>(y), m.worlds) << ")\n";
  }
  return out.str();
}

}  // namespace ncl::oracle
