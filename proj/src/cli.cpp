#include "orthoentropy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthoentropy/closedform.hpp"
#include "orthoentropy/entropy.hpp"
#include "orthoentropy/numthy.hpp"
#include "orthoentropy/specfun.hpp"
#include "orthoentropy/spectrum.hpp"

namespace orthoentropy::cli {

namespace {

using nlohmann::json;

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> comments;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

json cell_json(const Cell& c) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(long long v) const { return v; }
    json operator()(double v) const { return std::isfinite(v) ? json(v) : json(nullptr); }
    json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (const auto& line : t.comments) out << "# " << line << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << render_cell(row[c]);
    out << '\n';
  }
  return out.str();
}

json rows_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

// Results land in input order whatever the scheduling.
template <typename T>
std::vector<T> map_over_n(const RunConfig& config, const std::function<T(int)>& fn) {
  const auto& ns = config.n_list;
  std::vector<T> out(ns.size());
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(ns.size()));
  std::mutex log_mutex;
  auto task = [&](std::size_t i) {
    out[i] = fn(ns[i]);
    if (config.log != nullptr) {
      std::lock_guard lock(log_mutex);
      *config.log << "n=" << ns[i] << " done\n";
    }
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) task(i);
    return out;
  }
  std::mutex queue_mutex;
  std::size_t next = 0;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard lock(queue_mutex);
          if (next >= ns.size() || failure) return;
          i = next++;
        }
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(queue_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

json document(const RunConfig& config) {
  json doc = json::object();
  doc["command"] = to_string(config.command);
  return doc;
}

std::string finish(const RunConfig& config, const Table& table, json doc) {
  if (config.output_format == Format::csv) return render_csv(table);
  doc["rows"] = rows_json(table);
  return doc.dump(2) + "\n";
}

RunResult run_entropy(const RunConfig& config) {
  const auto tables = map_over_n<entropy::EntropyTable>(
      config, [&](int n) { return entropy::entropy_table(config.family, n, config.include_dual); });
  Table t;
  t.columns = {"n", "j", "lambda", "christoffel", "S_nj", "method"};
  if (config.include_dual) t.columns.push_back("S_dual");
  t.comments.push_back("family=" + config.family.describe());
  for (const auto& et : tables) {
    for (std::size_t j = 0; j < et.values.size(); ++j) {
      std::vector<Cell> row{static_cast<long long>(et.n), static_cast<long long>(j + 1), et.zeros[j],
                            et.christoffel[j], et.values[j], std::string(entropy::to_string(et.method))};
      if (et.dual_values) row.emplace_back((*et.dual_values)[j]);
      t.rows.push_back(std::move(row));
    }
  }
  json doc = document(config);
  doc["family"] = config.family.describe();
  return {kExitOk, finish(config, t, std::move(doc))};
}

RunResult run_dual(const RunConfig& config) {
  const auto tables = map_over_n<entropy::EntropyTable>(
      config, [&](int n) { return entropy::entropy_table(config.family, n, true); });
  Table t;
  t.columns = {"n", "i", "S_dual"};
  t.comments.push_back("family=" + config.family.describe());
  for (const auto& et : tables) {
    for (std::size_t i = 0; i < et.dual_values->size(); ++i) {
      t.rows.push_back({static_cast<long long>(et.n), static_cast<long long>(i + 1), (*et.dual_values)[i]});
    }
  }
  json doc = document(config);
  doc["family"] = config.family.describe();
  return {kExitOk, finish(config, t, std::move(doc))};
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

RunResult run_closed_form(const RunConfig& config) {
  struct PerN {
    std::vector<closedform::ClosedFormResult> profile;
    closedform::ExtremalSummary summary;
  };
  const auto results = map_over_n<PerN>(config, [&](int n) {
    return PerN{closedform::closed_form_profile(config.kind, n), closedform::extremal_summary(config.kind, n)};
  });
  Table t;
  t.columns = {"n", "j", "d", "value"};
  t.comments.push_back("kind=" + std::to_string(config.kind));
  json summaries = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& s = results[i].summary;
    const int n = config.n_list[i];
    t.comments.push_back("n=" + std::to_string(n) + " max=" + format_double(s.max_value) + " argmax=" +
                         join(s.argmax_set) + " min=" + format_double(s.min_value) + " argmin=" + join(s.argmin_set));
    summaries.push_back({{"n", n},
                         {"max_value", s.max_value},
                         {"argmax", s.argmax_set},
                         {"min_value", s.min_value},
                         {"argmin", s.argmin_set}});
    for (const auto& r : results[i].profile) {
      t.rows.push_back({static_cast<long long>(r.n), static_cast<long long>(r.j), static_cast<long long>(r.d), r.value});
    }
  }
  json doc = document(config);
  doc["kind"] = config.kind;
  doc["summaries"] = std::move(summaries);
  return {kExitOk, finish(config, t, std::move(doc))};
}

RunResult run_compare(const RunConfig& config) {
  const auto reports = map_over_n<closedform::ComparisonReport>(
      config, [&](int n) { return closedform::compare(config.family, n, config.threshold); });
  bool all_pass = true;
  Table t;
  t.columns = {"n", "j", "abs_diff"};
  t.comments.push_back("family=" + config.family.describe() + " threshold=" + format_double(config.threshold));
  json list = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    t.comments.push_back("n=" + std::to_string(r.n) + " max_abs_diff=" + format_double(r.max_abs_diff) +
                         " pass=" + (r.pass ? "true" : "false"));
    for (std::size_t j = 0; j < r.per_j_diffs.size(); ++j) {
      t.rows.push_back({static_cast<long long>(r.n), static_cast<long long>(j + 1), r.per_j_diffs[j]});
    }
    list.push_back({{"n", r.n},
                    {"family", r.family.describe()},
                    {"threshold", r.threshold},
                    {"max_abs_diff", r.max_abs_diff},
                    {"per_j_diffs", r.per_j_diffs},
                    {"pass", r.pass}});
  }
  RunResult result;
  result.exit_status = all_pass ? kExitOk : kExitCompareFailed;
  if (config.output_format == Format::csv) {
    result.artifact = render_csv(t);
  } else {
    json doc = document(config);
    doc["family"] = config.family.describe();
    doc["threshold"] = config.threshold;
    doc["pass"] = all_pass;
    doc["reports"] = std::move(list);
    result.artifact = doc.dump(2) + "\n";
  }
  return result;
}

json report_json(const numthy::MainLemmaReport& r) {
  json multiplicity = json::array();
  for (const auto& [value, hits] : r.multiplicity_map) multiplicity.push_back({{"value", value}, {"count", hits}});
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"clause", v.clause}, {"pass", v.pass}, {"detail", v.detail}});
  return {{"passed", r.passed()},
          {"image_values", std::vector<numthy::Int>(r.image_values.begin(), r.image_values.end())},
          {"multiplicity", std::move(multiplicity)},
          {"verdicts", std::move(verdicts)}};
}

RunResult run_phi_table(const RunConfig& config) {
  struct Entry {
    numthy::Int n, j;
    std::vector<numthy::Int> phi;  // k = 0..2n
    numthy::MainLemmaReport report;
  };
  const auto per_n = map_over_n<std::vector<Entry>>(config, [&](int n) {
    std::vector<Entry> entries;
    const int first = config.j.value_or(1);
    const int last = config.j.value_or(n);
    for (int j = first; j <= last; ++j) {
      Entry e{n, j, {}, numthy::verify_main_lemma(n, j)};
      const numthy::PhiFunction phi(n, j);
      for (numthy::Int k = 0; k <= 2 * numthy::Int{n}; ++k) e.phi.push_back(numthy::phi_at_integer(phi, k));
      entries.push_back(std::move(e));
    }
    return entries;
  });
  Table t;
  t.columns = {"n", "j", "k", "phi"};
  json list = json::array();
  for (const auto& entries : per_n) {
    for (const auto& e : entries) {
      t.comments.push_back("n=" + std::to_string(e.n) + " j=" + std::to_string(e.j) + " main_lemma=" +
                           (e.report.passed() ? "pass" : "fail " + e.report.first_failure()));
      for (std::size_t k = 0; k < e.phi.size(); ++k) {
        t.rows.push_back({static_cast<long long>(e.n), static_cast<long long>(e.j), static_cast<long long>(k),
                          static_cast<long long>(e.phi[k])});
      }
      list.push_back({{"n", e.n},
                      {"j", e.j},
                      {"d", e.report.d},
                      {"gcd_j_2n", e.report.d2},
                      {"phi", e.phi},
                      {"main_lemma", report_json(e.report)}});
    }
  }
  if (config.output_format == Format::csv) return {kExitOk, render_csv(t)};
  json doc = document(config);
  doc["entries"] = std::move(list);
  return {kExitOk, doc.dump(2) + "\n"};
}

RunResult run_special(const RunConfig& config) {
  const specfun::RFunctionEvaluator r;
  Table t;
  t.columns = {"x", "digamma_form", "series_form", "difference"};
  for (double x : config.grid.points()) {
    const double dg = r.digamma_form(x);
    Cell series;
    Cell diff;
    // Outside its convergence window the series column is left empty.
    try {
      const double s = r.series_form(x);
      series = s;
      diff = dg - s;
    } catch (const std::domain_error&) {
    }
    t.rows.push_back({x, dg, series, diff});
  }
  json doc = document(config);
  doc["grid"] = {{"start", config.grid.start}, {"stop", config.grid.stop}, {"step", config.grid.step}};
  return {kExitOk, finish(config, t, std::move(doc))};
}

std::vector<int> parse_n_tokens(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const auto& tok : tokens) {
    const auto dots = tok.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("bad --n value '" + tok + "'");
      continue;
    }
    const std::string lo_text = tok.substr(0, dots);
    const std::string hi_text = tok.substr(dots + 2);
    std::size_t used_hi = 0;
    const int lo = std::stoi(lo_text, &used);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used != lo_text.size() || used_hi != hi_text.size() || hi < lo) {
      throw std::invalid_argument("bad --n range '" + tok + "'");
    }
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out;
  const double span = (stop - start) / step;
  const auto count = static_cast<long long>(std::floor(span + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw std::invalid_argument("grid must be start:stop:step");
  try {
    std::size_t used = 0;
    const std::string parts[] = {text.substr(0, first), text.substr(first + 1, second - first - 1),
                                 text.substr(second + 1)};
    double* fields[] = {&g.start, &g.stop, &g.step};
    for (int i = 0; i < 3; ++i) {
      *fields[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must be start:stop:step with numeric fields, got '" + text + "'");
  }
  if (!(g.step > 0.0) || !(g.stop >= g.start) || !std::isfinite(g.stop)) {
    throw std::invalid_argument("grid needs step > 0 and stop >= start");
  }
  if ((g.stop - g.start) / g.step > 1e7) throw std::invalid_argument("grid has more than 1e7 points");
  return g;
}

void RunConfig::validate() const {
  if (command != Command::special) {
    if (n_list.empty()) throw std::invalid_argument("at least one n is required");
    for (int n : n_list) {
      if (n < 1) throw std::invalid_argument("n must be positive");
    }
  }
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  if (kind != 1 && kind != 2) throw std::invalid_argument("kind must be 1 or 2");
  if (j && *j < 1) throw std::invalid_argument("j must be positive");
}

RunResult run(const RunConfig& config) {
  config.validate();
  RunConfig sorted = config;
  std::sort(sorted.n_list.begin(), sorted.n_list.end());
  sorted.n_list.erase(std::unique(sorted.n_list.begin(), sorted.n_list.end()), sorted.n_list.end());
  switch (sorted.command) {
    case Command::entropy:
      return run_entropy(sorted);
    case Command::closed_form:
      return run_closed_form(sorted);
    case Command::compare:
      return run_compare(sorted);
    case Command::phi_table:
      return run_phi_table(sorted);
    case Command::special:
      return run_special(sorted);
    case Command::dual:
      return run_dual(sorted);
  }
  throw std::logic_error("unknown command");
}

const char* to_string(Command c) {
  switch (c) {
    case Command::entropy:
      return "entropy";
    case Command::closed_form:
      return "closed-form";
    case Command::compare:
      return "compare";
    case Command::phi_table:
      return "phi-table";
    case Command::special:
      return "special";
    case Command::dual:
      return "dual";
  }
  return "unknown";
}

unsigned worker_count() {
  if (const char* env = std::getenv("ORTHO_ENTROPY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete entropies of orthogonal polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string family_name = "chebyshev1";
  std::vector<std::string> n_tokens;
  std::optional<int> kind;
  std::optional<int> j;
  std::optional<double> alpha, beta, theta, a, c;
  std::string grid_text = "0:0.5:0.01";
  std::string format = "csv";
  std::string output;
  double threshold = closedform::kDefaultCompareThreshold;
  bool dual = false;
  bool verbose = false;

  app.add_option("--family", family_name, "chebyshev1|chebyshev2|jacobi|pollaczek|meixner");
  app.add_option("--n", n_tokens, "degrees: comma list, ranges lo..hi allowed")->delimiter(',');
  app.add_option("--kind", kind, "Chebyshev kind for closed-form (1 or 2)");
  app.add_option("--j", j, "single index for phi-table");
  app.add_option("--alpha", alpha, "jacobi alpha (default 1.2)");
  app.add_option("--beta", beta, "jacobi beta (default 8.9) or meixner beta (default 3.4)");
  app.add_option("--theta", theta, "pollaczek theta (default 1.2)");
  app.add_option("--a", a, "pollaczek a (default 8.9)");
  app.add_option("--c", c, "meixner c (default 0.2)");
  app.add_option("--grid", grid_text, "special: start:stop:step");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "write to this path instead of standard output");
  app.add_option("--threshold", threshold, "compare threshold");
  app.add_flag("--dual", dual, "entropy: add the dual entropy column");
  app.add_flag("--verbose", verbose, "log one line per finished n to standard error");

  const std::pair<const char*, Command> commands[] = {
      {"entropy", Command::entropy},     {"closed-form", Command::closed_form},
      {"compare", Command::compare},     {"phi-table", Command::phi_table},
      {"special", Command::special},     {"dual", Command::dual}};
  const char* help[] = {"S_{n,j} table at the zeros",
                        "closed-form Chebyshev entropies and extremal summary",
                        "spectral versus closed form, exit 3 on failure",
                        "phi values and Main Lemma clause checks",
                        "R(x) on a grid by both evaluation routes",
                        "dual (row) entropies"};
  for (std::size_t i = 0; i < std::size(commands); ++i) app.add_subcommand(commands[i].first, help[i]);

  RunConfig config;
  try {
    app.parse(argc, argv);
    for (const auto& [name, command] : commands) {
      if (app.got_subcommand(name)) config.command = command;
    }
    const auto family_kind = families::parse_family_kind(family_name);
    switch (family_kind) {
      case families::FamilyKind::chebyshev1:
        config.family = families::FamilySpec::chebyshev1();
        break;
      case families::FamilyKind::chebyshev2:
        config.family = families::FamilySpec::chebyshev2();
        break;
      case families::FamilyKind::jacobi:
      case families::FamilyKind::pollaczek:
      case families::FamilyKind::meixner:
        break;
    }
    config.n_list = parse_n_tokens(n_tokens);
    config.kind = kind.value_or(family_kind == families::FamilyKind::chebyshev2 ? 2 : 1);
    config.j = j;
    config.grid = parse_grid(grid_text);
    config.output_format = format == "json" ? Format::json : Format::csv;
    if (!output.empty()) config.output_path = output;
    config.threshold = threshold;
    config.include_dual = dual;
    if (verbose) config.log = &err;
    config.validate();

    // Parameter domain problems are reported as domain errors below.
    try {
      if (family_kind == families::FamilyKind::jacobi) {
        config.family = families::FamilySpec::jacobi(alpha.value_or(1.2), beta.value_or(8.9));
      } else if (family_kind == families::FamilyKind::pollaczek) {
        config.family = families::FamilySpec::pollaczek(theta.value_or(1.2), a.value_or(8.9));
      } else if (family_kind == families::FamilyKind::meixner) {
        config.family = families::FamilySpec::meixner(beta.value_or(3.4), c.value_or(0.2));
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitDomainError;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  RunResult result;
  try {
    result = run(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kExitDomainError;
    }
    file << result.artifact;
    if (!file.flush()) {
      err << "error: failed writing " << *config.output_path << '\n';
      return kExitDomainError;
    }
  } else {
    out << result.artifact;
  }
  if (result.exit_status == kExitCompareFailed) err << "compare: threshold exceeded\n";
  return result.exit_status;
}

}  // namespace orthoentropy::cli
