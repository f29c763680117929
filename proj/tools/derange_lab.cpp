// derange-lab: enumerate, verify, trace and tabulate from the command line.
//
// Exit status: 0 ok, 1 a proven identity failed, 2 usage, 3 budget, 4 domain.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "derange/identities.hpp"
#include "derange/involution.hpp"
#include "derange/permutation.hpp"
#include "derange/sef.hpp"
#include "derange/serialize.hpp"

using namespace derange;

namespace {

constexpr int kDefaultPermBudget = 8;
constexpr int kDefaultBiderBudget = 5;
constexpr int kPermCeiling = 10;
constexpr int kBiderCeiling = 6;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

// One output row. Text mode prints `line` when set, key=value pairs otherwise.
struct Record {
  std::vector<std::pair<std::string, derange::json>> fields;
  std::optional<std::string> line;

  Record& add(std::string key, derange::json value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

std::string cell(const derange::json& v, Format format) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out = format == Format::text ? "{" : "";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += format == Format::text ? "," : " ";
      out += cell(v[i], format);
    }
    if (format == Format::text) out += "}";
    return out;
  }
  return v.dump();
}

class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  void emit(const Record& r) {
    switch (format_) {
      case Format::json: {
        derange::json j = derange::json::object();
        for (const auto& [k, v] : r.fields) j[k] = v;
        std::cout << j.dump() << '\n';
        break;
      }
      case Format::csv:
        if (!header_done_) {
          for (std::size_t i = 0; i < r.fields.size(); ++i) std::cout << (i ? "," : "") << r.fields[i].first;
          std::cout << '\n';
          header_done_ = true;
        }
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
          std::cout << (i ? "," : "") << cell(r.fields[i].second, Format::csv);
        }
        std::cout << '\n';
        break;
      case Format::text:
        if (r.line) {
          std::cout << *r.line << '\n';
          break;
        }
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
          std::cout << (i ? " " : "") << r.fields[i].first << '=' << cell(r.fields[i].second, Format::text);
        }
        std::cout << '\n';
        break;
    }
  }

 private:
  Format format_;
  bool header_done_ = false;
};

struct RunConfig {
  Format format = Format::text;
  std::optional<int> max_n;
  bool timing = false;

  Limits limits() const {
    Limits l;
    l.max_perm_n = l.max_verify_n = max_n.value_or(kDefaultPermBudget);
    l.max_bider_n = std::min(max_n.value_or(kDefaultBiderBudget), kBiderCeiling);
    if (l.max_perm_n < 1) throw usage_error("--max-n must be >= 1");
    if (l.max_perm_n > kPermCeiling) {
      throw budget_error("--max-n " + std::to_string(l.max_perm_n) + " exceeds the hard ceiling " +
                         std::to_string(kPermCeiling));
    }
    return l;
  }
};

std::pair<int, int> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw usage_error("bad range '" + text + "'");
    }
    if (used != s.size()) throw usage_error("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = number(text);
    return {n, n};
  }
  const int lo = number(text.substr(0, dots));
  const int hi = number(text.substr(dots + 2));
  if (lo > hi) throw usage_error("empty range '" + text + "'");
  return {lo, hi};
}

IntSet parse_set(const std::string& text) {
  IntSet out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw usage_error("bad set '" + text + "'");
    } catch (const std::logic_error&) {
      throw usage_error("bad set '" + text + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

derange::json set_json(const IntSet& s) { return derange::json(s); }

Record verification_record(const VerificationResult& r, const RunConfig& cfg) {
  Record rec;
  rec.add("identity", r.identity).add("n", r.n).add("equal", r.equal);
  rec.add("lhs_terms", r.lhs.size()).add("rhs_terms", r.rhs.size());
  const derange::json full = to_json(r, cfg.timing);
  if (cfg.format == Format::csv) {
    std::string d;
    if (r.first_discrepancy) {
      d = r.first_discrepancy->monomial.to_string() + " " + r.first_discrepancy->lhs.str() + " " +
          r.first_discrepancy->rhs.str();
    }
    rec.add("first_discrepancy", d);
  } else {
    rec.add("first_discrepancy", full["first_discrepancy"]);
  }
  if (cfg.timing) rec.add("elapsed_ms", full["elapsed_ms"]);
  if (cfg.format == Format::json) rec.add("lhs", full["lhs"]).add("rhs", full["rhs"]);
  if (cfg.format == Format::text) {
    std::ostringstream line;
    line << r.identity << " n=" << r.n << (r.equal ? " equal" : " NOT EQUAL") << " lhs_terms=" << r.lhs.size()
         << " rhs_terms=" << r.rhs.size();
    if (r.first_discrepancy) {
      line << " first_discrepancy=" << r.first_discrepancy->monomial.to_string() << " lhs=" << r.first_discrepancy->lhs
           << " rhs=" << r.first_discrepancy->rhs;
    }
    if (cfg.timing) line << " elapsed_ms=" << full["elapsed_ms"].dump();
    rec.line = line.str();
  }
  return rec;
}

std::string factor_text(const std::optional<Factorization>& f) {
  if (!f) return "none";
  std::ostringstream out;
  out << (f->sign < 0 ? "-" : "") << "t^" << f->a << "*(t+1)^" << f->b << "*(t-1)^" << f->c;
  return out.str();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity;
  std::optional<std::string> range;
  std::optional<std::string> fixed;
};

std::pair<int, int> default_range(const std::string& identity, const Limits& limits) {
  if (identity == "bider") return {1, 4};
  if (identity == "rlm-table") return {3, limits.max_verify_n};
  if (identity.starts_with("main-") || identity == "mr-count") return {2, 7};
  return {1, 7};
}

int run_verify(const VerifyArgs& args, const RunConfig& cfg) {
  const Limits limits = cfg.limits();
  const auto [lo, hi] = args.range ? parse_range(*args.range) : default_range(args.identity, limits);
  Emitter out(cfg.format);
  bool all_equal = true;
  auto report = [&](const VerificationResult& r) {
    all_equal = all_equal && r.equal;
    out.emit(verification_record(r, cfg));
  };
  const std::string& id = args.identity;

  if (id == "rlm-table") {
    const RlmDerangementTable table = rlm_derangement_table(hi, limits);
    auto find = [](const std::vector<PatternCheck>& checks, int n) -> const PatternCheck* {
      for (const auto& c : checks) {
        if (c.n == n) return &c;
      }
      return nullptr;
    };
    for (int n = std::max(lo, 3); n <= hi; ++n) {
      Record rec;
      rec.add("identity", id).add("n", n);
      auto add_check = [&](const char* name, const PatternCheck* c) {
        if (c) {
          rec.add(std::string(name) + "_observed", to_json(c->observed));
          rec.add(std::string(name) + "_predicted", to_json(c->predicted));
          rec.add(std::string(name) + "_holds", c->holds());
        } else {
          rec.add(std::string(name) + "_observed", nullptr);
          rec.add(std::string(name) + "_predicted", nullptr);
          rec.add(std::string(name) + "_holds", nullptr);
        }
      };
      add_check("first_column", find(table.first_column_recursion, n));
      add_check("subdiagonal", find(table.subdiagonal_formula, n));
      add_check("shifted_subdiagonal", find(table.shifted_subdiagonal_formula, n));
      out.emit(rec);
    }
    return EXIT_SUCCESS;
  }

  for (int n = lo; n <= hi; ++n) {
    if (id == "main-values") {
      report(main_theorem_values(n, limits));
    } else if (id == "main-indices") {
      report(main_theorem_indices(n, limits));
    } else if (id == "exc-sn") {
      report(exc_sum_sn(n, limits));
    } else if (id == "der-exc") {
      report(derangement_exc_mono(n, limits));
    } else if (id == "rlm-sn") {
      report(rlm_sum_sn(n, limits));
    } else if (id == "rlm-der") {
      report(rlm_derangement_sum(n, limits));
    } else if (id == "bider") {
      report(biderangement_identity(n, limits));
    } else if (id == "exc-fixed") {
      detail::check_budget(n, limits.max_verify_n, "exc-fixed");
      const std::vector<IntSet> sets = args.fixed ? std::vector<IntSet>{parse_set(*args.fixed)} : subsets_lex(n);
      for (const IntSet& fixed : sets) {
        const VerificationResult r = exc_sum_fixed(n, fixed, limits);
        all_equal = all_equal && r.equal;
        Record rec = verification_record(r, cfg);
        rec.fields.insert(rec.fields.begin() + 2, {"fixed", set_json(fixed)});
        if (rec.line) *rec.line += " fixed=" + format_set(fixed);
        out.emit(rec);
      }
    } else if (id == "mr-count") {
      if (n < 2) throw domain_error("mr-count needs n >= 2");
      const Integer expected = n % 2 == 0 ? -1 : 1;
      for (int k = 1; k <= n - 1; ++k) {
        const Integer value = mr_counting(n, k, limits);
        all_equal = all_equal && value == expected;
        Record rec;
        rec.add("identity", id).add("n", n).add("k", k).add("value", to_json(value));
        rec.add("expected", to_json(expected)).add("equal", value == expected);
        out.emit(rec);
      }
    } else if (id == "conjecture") {
      for (int k = 1; k <= n; ++k) {
        const ConjectureReport r = type_restricted_sum(n, k, limits);
        Record rec;
        rec.add("identity", id).add("n", n).add("k", k).add("all_coeffs_nonneg", r.all_coeffs_nonneg);
        rec.add("raw_nonneg", r.raw_nonneg).add("terms", r.sum.size()).add("sum", r.sum.to_string());
        out.emit(rec);
      }
    } else if (id == "single-cycle") {
      const SingleCycleCensus c = single_cycle_census(n, limits);
      Record rec;
      rec.add("identity", id).add("n", n).add("distinct_terms", c.distinct_terms).add("sum", c.sum.to_string());
      out.emit(rec);
    } else if (id == "fix-rlm-probe") {
      detail::check_budget(n, limits.max_verify_n, "fix-rlm-probe");
      const std::vector<IntSet> sets = args.fixed ? std::vector<IntSet>{parse_set(*args.fixed)} : subsets_lex(n);
      for (const IntSet& fixed : sets) {
        const FixedRlmProbe p = fixed_rlm_probe(n, fixed, limits);
        Record rec;
        rec.add("identity", id).add("n", n).add("fixed", set_json(fixed)).add("sum", p.sum.to_string());
        rec.add("factored_form", p.factored_form ? derange::json(factor_text(p.factored_form)) : derange::json());
        out.emit(rec);
      }
    }
  }
  return all_equal ? EXIT_SUCCESS : 1;
}

// ---------------------------------------------------------------------------
// trace

int run_trace(const std::string& word, const std::string& map, const RunConfig& cfg) {
  Emitter out(cfg.format);
  Record rec;
  rec.add("map", map).add("input", word);
  if (map == "psi") {
    const PsiTrace t = psi(SubexcedantFunction::parse(word));
    const derange::json j = to_json(t);
    rec.fields.clear();
    rec.add("map", map);
    for (const auto& [k, v] : j.items()) rec.add(k, v);
  } else if (map == "psi-hat") {
    const Permutation p = Permutation::parse(word);
    const Permutation q = psi_hat(p);
    rec.add("output", q.to_string());
    rec.add("case", psi_case(perm_to_sef(p)).to_string()).add("image_case", psi_case(perm_to_sef(q)).to_string());
  } else if (map == "iota") {
    const Permutation p = Permutation::parse(word);
    rec.add("output", iota(p).to_string()).add("critical", is_critical(p));
  } else if (map == "kappa") {
    const Permutation p = Permutation::parse(word);
    rec.add("output", kappa(p).to_string()).add("decisive", is_decisive(p));
  } else if (map == "zeta") {
    rec.add("output", zeta(Permutation::parse(word)).to_string());
  } else if (map == "beta") {
    const Biderangement w = Biderangement::parse(word);
    const Biderangement b = beta(w);
    rec.add("output", b.to_string()).add("fixed", b == w);
  }
  out.emit(rec);
  return EXIT_SUCCESS;
}

// ---------------------------------------------------------------------------
// table

int run_table(const std::string& name, const RunConfig& cfg) {
  const Limits limits = cfg.limits();
  Emitter out(cfg.format);
  if (name == "rlm-der") {
    const int max_n = limits.max_verify_n;
    const RlmDerangementTable table = rlm_derangement_table(max_n, limits);
    for (int n = 2; n <= max_n; ++n) {
      derange::json row = derange::json::array();
      std::string line = std::to_string(n) + ":";
      for (int k = 1; k <= n - 1; ++k) {
        row.push_back(to_json(table.at(n, k)));
        line += " " + table.at(n, k).str();
      }
      Record rec;
      rec.add("n", n).add("row", row);
      rec.line = line;
      out.emit(rec);
    }
  } else if (name == "case-transitions") {
    const int max_n = limits.max_perm_n;
    for (int n = 2; n <= max_n; ++n) {
      std::map<std::pair<CaseLabel, CaseLabel>, std::size_t> census;
      for (const SubexcedantFunction& f : enumerate_derangement_sef(n, limits)) {
        const PsiTrace t = psi(f);
        ++census[{t.case_label, t.image_case}];
      }
      for (const auto& [pair, count] : census) {
        Record rec;
        rec.add("n", n).add("case", pair.first.to_string()).add("image_case", pair.second.to_string());
        rec.add("count", count).add("permitted", permitted_transition(pair.first, pair.second));
        out.emit(rec);
      }
    }
  } else if (name == "decisive-counts") {
    const int max_n = limits.max_perm_n;
    for (int n = 1; n <= max_n; ++n) {
      std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
      for (const Permutation& p : enumerate_sn(n, limits)) {
        if (is_decisive(p)) ++counts[stat::rlm_indices(p.word()).size()];
      }
      for (int k = 1; k <= n; ++k) {
        Record rec;
        rec.add("n", n).add("k", k).add("decisive", counts[k]);
        rec.add("predicted", to_json(binomial(n / 2, k - (n + 1) / 2)));
        rec.add("sign", (n - k) % 2 == 0 ? 1 : -1);
        out.emit(rec);
      }
    }
  } else if (name == "bider-counts") {
    const int max_n = cfg.max_n.value_or(kDefaultBiderBudget);
    detail::check_budget(max_n, limits.max_bider_n, "bider-counts");
    for (int n = 1; n <= max_n; ++n) {
      Record rec;
      rec.add("n", n).add("count", enumerate_biderangements(n, limits).count());
      out.emit(rec);
    }
  }
  return EXIT_SUCCESS;
}

// ---------------------------------------------------------------------------
// stats, enumerate

int run_stats(const std::string& word, const RunConfig& cfg) {
  const Permutation p = Permutation::parse(word);
  const StatReport s = stats(p);
  Record rec;
  rec.add("word", p.to_string());
  const derange::json j = to_json(s);
  for (const auto& [k, v] : j.items()) rec.add(k, v);
  Emitter(cfg.format).emit(rec);
  return EXIT_SUCCESS;
}

template <class Stream>
void emit_words(Stream stream, Emitter& out) {
  for (const auto& item : stream) {
    Record rec;
    rec.add("word", item.to_string());
    rec.line = item.to_string();
    out.emit(rec);
  }
}

int run_enumerate(const std::string& family, int n, const RunConfig& cfg) {
  const Limits limits = cfg.limits();
  Emitter out(cfg.format);
  if (family == "sn") {
    detail::check_budget(n, limits.max_perm_n, "enumerate sn");
    emit_words(enumerate_sn(n, limits), out);
  } else if (family == "der") {
    detail::check_budget(n, limits.max_perm_n, "enumerate der");
    emit_words(enumerate_derangements(n, limits), out);
  } else if (family == "sef") {
    detail::check_budget(n, limits.max_perm_n, "enumerate sef");
    emit_words(enumerate_sef(n, limits), out);
  } else if (family == "der-sef") {
    detail::check_budget(n, limits.max_perm_n, "enumerate der-sef");
    emit_words(enumerate_derangement_sef(n, limits), out);
  } else if (family == "bider") {
    emit_words(enumerate_biderangements(n, limits), out);
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed sums over derangements: enumeration, identity checks, involution traces."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Size budget (table size for 'table')");
  app.add_flag("--timing", cfg.timing, "Include elapsed time in verify output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity exhaustively for each n in a range");
  verify_cmd->fallthrough();
  verify_cmd->add_option("identity", verify.identity)
      ->required()
      ->check(CLI::IsMember({"main-values", "main-indices", "mr-count", "exc-sn", "exc-fixed", "der-exc", "rlm-sn",
                             "rlm-der", "bider", "conjecture", "single-cycle", "rlm-table", "fix-rlm-probe"}));
  verify_cmd->add_option("--n", verify.range, "n or inclusive range a..b");
  verify_cmd->add_option("--fixed", verify.fixed, "Fixed set for exc-fixed and fix-rlm-probe, e.g. 2,5");

  std::string trace_word;
  std::string trace_map;
  auto* trace_cmd = app.add_subcommand("trace", "Apply one map to a word");
  trace_cmd->fallthrough();
  trace_cmd->add_option("word", trace_word)->required();
  trace_cmd->add_option("map", trace_map)
      ->required()
      ->check(CLI::IsMember({"psi", "psi-hat", "iota", "kappa", "zeta", "beta"}));

  std::string table_name;
  auto* table_cmd = app.add_subcommand("table", "Emit a table up to --max-n");
  table_cmd->fallthrough();
  table_cmd->add_option("name", table_name)
      ->required()
      ->check(CLI::IsMember({"rlm-der", "case-transitions", "decisive-counts", "bider-counts"}));

  std::string stats_word;
  auto* stats_cmd = app.add_subcommand("stats", "Statistics of a permutation");
  stats_cmd->fallthrough();
  stats_cmd->add_option("word", stats_word)->required();

  std::string family;
  int enum_n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family in lexicographic order");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"sn", "der", "sef", "der-sef", "bider"}));
  enumerate_cmd->add_option("n", enum_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (*verify_cmd) return run_verify(verify, cfg);
    if (*trace_cmd) return run_trace(trace_word, trace_map, cfg);
    if (*table_cmd) return run_table(table_name, cfg);
    if (*stats_cmd) return run_stats(stats_word, cfg);
    if (*enumerate_cmd) return run_enumerate(family, enum_n, cfg);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 4;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
