#include "ncl/syntax/includes.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ncl/error.hpp"
#include "ncl/syntax/parser.hpp"

namespace ncl::syntax {

namespace fs = std::filesystem;

namespace {

struct Frame {
  fs::path canonical;
  std::string label;
};

class Resolver {
 public:
  explicit Resolver(const std::vector<fs::path>& search_paths) : search_paths_(search_paths) {}

  void expand(const Problem& problem, const fs::path& dir, std::vector<AnnotatedFormula>& out,
              const std::vector<std::string>* selection) {
    auto keep = [&](const AnnotatedFormula& f) {
      return !selection || selection->empty() ||
             std::find(selection->begin(), selection->end(), f.name) != selection->end();
    };
    for (std::size_t i = 0; i <= problem.formulas.size(); ++i) {
      for (const auto& inc : problem.includes) {
        if (inc.position == i) include(inc, dir, out, selection);
      }
      if (i < problem.formulas.size() && keep(problem.formulas[i]))
        out.push_back(problem.formulas[i]);
    }
  }

  std::vector<Frame> stack;

 private:
  void include(const IncludeDirective& inc, const fs::path& dir,
               std::vector<AnnotatedFormula>& out, const std::vector<std::string>* outer) {
    fs::path found = locate(inc.path, dir);
    fs::path canon = fs::weakly_canonical(found);
    for (std::size_t k = 0; k < stack.size(); ++k) {
      if (stack[k].canonical != canon) continue;
      std::string cycle;
      for (std::size_t j = k; j < stack.size(); ++j) cycle += stack[j].label + " -> ";
      cycle += inc.path;
      throw Error(ErrorCode::IncludeError, "include cycle: " + cycle);
    }
    std::ifstream in(found);
    if (!in) throw Error(ErrorCode::IncludeError, "cannot read included file '" + inc.path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Problem sub;
    try {
      sub = parse_problem(buf.str());
    } catch (const Error& e) {
      throw Error(e.code(), inc.path + ": " + e.what());
    }
    stack.push_back({canon, inc.path});
    // A nested selection applies to the formulas of this file only.
    std::vector<AnnotatedFormula> nested;
    expand(sub, found.parent_path(), nested, nullptr);
    stack.pop_back();
    for (auto& f : nested) {
      bool wanted = inc.selection.empty() ||
                    std::find(inc.selection.begin(), inc.selection.end(), f.name) !=
                        inc.selection.end();
      if (wanted) out.push_back(std::move(f));
    }
    (void)outer;
  }

  fs::path locate(const std::string& path, const fs::path& dir) const {
    fs::path p(path);
    if (p.is_absolute()) {
      if (fs::exists(p)) return p;
    } else {
      if (fs::exists(dir / p)) return dir / p;
      for (const auto& root : search_paths_)
        if (fs::exists(root / p)) return root / p;
    }
    throw Error(ErrorCode::IncludeError, "included file not found: '" + path + "'");
  }

  const std::vector<fs::path>& search_paths_;
};

}  // namespace

Problem resolve_includes(const Problem& problem, const fs::path& problem_file,
                         const std::vector<fs::path>& search_paths) {
  Resolver r(search_paths);
  fs::path dir = problem_file.empty() ? fs::current_path() : problem_file.parent_path();
  if (dir.empty()) dir = fs::current_path();
  if (!problem_file.empty())
    r.stack.push_back({fs::weakly_canonical(problem_file), problem_file.filename().string()});

  Problem out;
  r.expand(problem, dir, out.formulas, nullptr);

  std::set<std::string> names;
  for (const auto& f : out.formulas)
    if (!names.insert(f.name).second)
      throw Error(ErrorCode::IncludeError, "duplicate formula name '" + f.name + "'");
  return out;
}

}  // namespace ncl::syntax
