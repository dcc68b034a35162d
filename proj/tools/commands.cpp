#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "abundant/bounds.hpp"
#include "abundant/errors.hpp"

namespace abundant::cli {

using nlohmann::ordered_json;

void RunConfig::validate() const {
  if (precision_bits < 64 || precision_bits > kMaxPrecision) {
    throw DomainError(fmt::format("precision must lie in [64, {}] bits", kMaxPrecision));
  }
  if (sieve_limit < 3 || sieve_limit >= (1ull << 31)) {
    throw DomainError("sieve limit must lie in [3, 2^31)");
  }
  if (!(max_log > 0) || !std::isfinite(max_log)) throw DomainError("max-log must be positive");
}

ReportFormat parse_format(const std::string& s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  if (s == "tsv") return ReportFormat::Tsv;
  if (s == "text") return ReportFormat::Text;
  throw DomainError("unknown format: " + s);
}

Notation parse_notation(const std::string& s) {
  if (s == "pp") return Notation::PrimePowers;
  if (s == "primorial") return Notation::Primorial;
  throw DomainError("unknown notation: " + s);
}

namespace {

std::string cell_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void render(const Document& doc, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json) {
    ordered_json root = ordered_json::object();
    for (const auto& t : doc.tables) {
      ordered_json arr = ordered_json::array();
      for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
        arr.push_back(std::move(obj));
      }
      root[t.name] = std::move(arr);
    }
    if (!doc.notes.empty()) root["notes"] = doc.notes;
    out << root.dump(2) << '\n';
    return;
  }

  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) out << '\n';
    first = false;
    if (format == ReportFormat::Text) {
      std::vector<std::size_t> w(t.columns.size());
      for (std::size_t c = 0; c < w.size(); ++c) {
        w[c] = t.columns[c].size();
        for (const auto& row : t.rows) w[c] = std::max(w[c], cell_text(row[c]).size());
      }
      out << t.name << '\n';
      auto line = [&](auto&& get) {
        std::string s;
        for (std::size_t c = 0; c < w.size(); ++c) {
          s += fmt::format("{:<{}}", get(c), c + 1 == w.size() ? 0 : w[c] + 2);
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
      };
      line([&](std::size_t c) { return t.columns[c]; });
      for (const auto& row : t.rows) line([&](std::size_t c) { return cell_text(row[c]); });
    } else {
      const char sep = format == ReportFormat::Csv ? ',' : '\t';
      if (doc.tables.size() > 1) out << "# " << t.name << '\n';
      for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? std::string(1, sep) : "") << t.columns[c];
      out << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          std::string s = cell_text(row[c]);
          if (format == ReportFormat::Csv) s = csv_quote(s);
          out << (c ? std::string(1, sep) : "") << s;
        }
        out << '\n';
      }
    }
  }
  for (const auto& n : doc.notes) out << "# " << n << '\n';
}

namespace {

std::string number_text(const FactoredNumber& n, Notation notation) {
  return notation == Notation::Primorial ? format_primorial(n) : format_pp(n);
}

ordered_json digits(const Interval& v, int sig) {
  std::string s = certified_digits(v, sig);
  if (s.empty()) return nullptr;
  return s;
}

ordered_json opt_index(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ClassifiedList generate_or_cached(const RunConfig& cfg) {
  if (cfg.cache_dir.empty()) return sa_numbers(cfg.max_log);
  const auto path = cfg.cache_dir / fmt::format("sa-v1-maxlog-{}.txt", cfg.max_log);
  if (std::filesystem::exists(path)) return import_list(path);
  ClassifiedList l = sa_numbers(cfg.max_log);
  std::filesystem::create_directories(cfg.cache_dir);
  export_list(l, path);
  return l;
}

// External lists may carry only SA entries; CA and XA flags are derived.
ClassifiedList complete_flags(ClassifiedList l) {
  if (l.entries.empty()) return l;
  const bool any = std::any_of(l.entries.begin(), l.entries.end(),
                               [](const ListEntry& e) { return e.flags != 0; });
  if (!any) {
    for (auto& e : l.entries) e.flags = kSA;
  }
  if (!l.horizon) l.horizon = approx_log_n(l.entries.back().n);
  if (l.count(kCA) == 0) {
    const auto ca = ca_up_to(*l.horizon).numbers(kCA);
    std::unordered_set<FactoredNumber> set(ca.begin(), ca.end());
    for (auto& e : l.entries)
      if (set.count(e.n)) e.flags |= kCA;
  }
  if (l.count(kXA) == 0 && *l.horizon >= std::log(10080.0)) {
    const auto xa = xa_numbers(l).numbers(kXA);
    std::unordered_set<FactoredNumber> set(xa.begin(), xa.end());
    for (auto& e : l.entries)
      if (set.count(e.n)) e.flags |= kXA;
  }
  return l;
}

}  // namespace

ClassifiedList load_sa(const RunConfig& cfg) {
  if (!cfg.inputs.empty()) return complete_flags(import_list(cfg.inputs.front(), true));
  return generate_or_cached(cfg);
}

const PrimeTables& tables(const RunConfig& cfg, std::uint64_t need) {
  static std::map<std::uint64_t, std::unique_ptr<PrimeTables>> memo;
  const std::uint64_t limit = std::max<std::uint64_t>(cfg.sieve_limit, 3);
  if (need > limit) {
    throw RangeNotCovered(fmt::format("needs primes to {}, sieve limit is {}", need, limit));
  }
  auto& slot = memo[limit];
  if (!slot) {
    slot = std::make_unique<PrimeTables>(cfg.cache_dir.empty()
                                             ? PrimeTables::build(limit)
                                             : PrimeTables::build_cached(limit, cfg.cache_dir));
  }
  return *slot;
}

Outcome cmd_generate(const RunConfig& cfg, const std::string& kind,
                     std::optional<std::size_t> ca_count,
                     const std::optional<std::filesystem::path>& export_path) {
  ClassifiedList list;
  if (kind == "ca") {
    list = ca_count ? ca_numbers(*ca_count) : ca_up_to(cfg.max_log);
  } else if (kind == "sa" || kind == "xa") {
    list = load_sa(cfg);
    if (kind == "xa") {
      if (!list.horizon || *list.horizon < std::log(10080.0)) {
        throw HorizonInsufficient("XA needs a horizon of at least log 10080");
      }
      ClassifiedList x;
      x.horizon = list.horizon;
      for (const auto& e : list.entries)
        if (e.flags & kXA) x.entries.push_back(e);
      list = std::move(x);
    }
  } else {
    throw DomainError("unknown kind: " + kind);
  }
  if (export_path) export_list(list, *export_path, cfg.notation);

  Table t{kind, {"index", "n", "flags", "f", "p", "log_n", "k2"}, {}};
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    const auto& n = list.entries[i].n;
    ordered_json f = nullptr;
    if (compare_value(n, factor_small(2)) > 0) f = digits(f_value(n, cfg.precision_bits), 10);
    t.rows.push_back({i + 1, number_text(n, cfg.notation), flags_string(list.entries[i].flags), f,
                      n.largest_prime(), digits(log_n(n, cfg.precision_bits), 10), n.k2()});
  }
  Outcome o;
  o.doc.tables.push_back(std::move(t));
  if (list.horizon) o.doc.notes.push_back(fmt::format("horizon log n <= {}", *list.horizon));
  return o;
}

Outcome cmd_check(const RunConfig& cfg, const std::string& criterion, std::uint64_t from,
                  std::uint64_t to) {
  ScanSummary s;
  if (criterion == "robin") {
    s = robin_scan(from, to, false);
  } else if (criterion == "robin-refined") {
    s = robin_scan(from, to, true);
  } else if (criterion == "lagarias") {
    s = lagarias_scan(from, to);
  } else if (criterion == "nicolas") {
    const PrimeTables& t = tables(cfg, 3);
    s = nicolas_scan(from, to, t);
  } else {
    throw DomainError("unknown criterion: " + criterion);
  }
  Outcome o;
  o.doc.tables.push_back({"summary",
                          {"criterion", "from", "to", "checked", "failures", "min_margin",
                           "min_margin_at", "holds"},
                          {{s.criterion_id, s.from, s.to, s.checked, s.failures,
                            fmt::format("{:.9g}", s.min_margin), s.min_margin_at, s.holds()}}});
  if (!s.failed.empty()) {
    Table f{"failed", {"criterion_id", "subject", "holds", "margin_lo", "margin_hi"}, {}};
    for (const auto& v : s.failed) {
      f.rows.push_back({v.criterion_id, v.subject, to_string(v.holds),
                        fmt::format("{:.12g}", v.margin.lower()),
                        fmt::format("{:.12g}", v.margin.upper())});
    }
    o.doc.tables.push_back(std::move(f));
    if (s.failures > s.failed.size()) {
      o.doc.notes.push_back(fmt::format("{} failures, first {} listed", s.failures, s.failed.size()));
    }
  }
  o.status = s.holds() ? 0 : 1;
  return o;
}

Outcome cmd_bounds(const RunConfig& cfg, const std::vector<std::string>& ids, std::uint64_t from,
                   std::uint64_t to) {
  std::vector<std::string> run = ids;
  if (run.empty())
    for (const auto& b : bound_registry()) run.push_back(b.id);
  const PrimeTables& tb = tables(cfg, to);
  Outcome o;
  Table t{"bounds",
          {"id", "range", "points", "holds", "worst_margin", "worst_point", "violations"},
          {}};
  Table viol{"violations", {"id", "side", "point", "verdict", "margin"}, {}};
  for (const auto& id : run) {
    try {
      const BoundReport r = verify_bound(id, tb, from, to);
      t.rows.push_back({r.bound_id, r.range_checked, r.points_checked, r.holds,
                        digits(r.worst_margin, 8), r.worst_point, r.violation_count});
      for (const auto& v : r.violations) {
        viol.rows.push_back({r.bound_id, v.side, v.point, to_string(v.verdict),
                             v.margin});
      }
      if (!r.holds) o.status = std::max(o.status, 1);
    } catch (const PrecisionExhausted& e) {
      o.doc.notes.push_back(fmt::format("incomplete: {}: {}", id, e.what()));
      o.status = 2;
      break;
    }
  }
  o.doc.tables.push_back(std::move(t));
  if (!viol.rows.empty()) o.doc.tables.push_back(std::move(viol));
  return o;
}

Outcome cmd_properties(const RunConfig& cfg, const std::vector<std::string>& ids,
                       Population population, bool show_violations) {
  const ClassifiedList list = load_sa(cfg);
  const std::uint8_t flag =
      population == Population::SA ? kSA : population == Population::XA ? kXA : kCA;
  const auto pop = list.numbers(flag);
  std::vector<std::string> run = ids;
  if (run.empty())
    for (const auto& p : property_registry()) run.push_back(p.id);

  Outcome o;
  Table t{"properties",
          {"id", "population", "filter", "units", "pass", "filtered", "violations",
           "first_hold_index", "large_enough", "exploratory", "holds"},
          {}};
  Table viol{"violations", {"id", "index", "subject", "detail"}, {}};
  for (const auto& id : run) {
    try {
      const PropertyReport r = run_property(id, pop, population, list.horizon);
      t.rows.push_back({r.property_id, r.population, r.condition_filter, r.unit_count,
                        r.pass_count, r.filtered_count, r.violations.size(),
                        opt_index(r.first_hold_index), r.large_enough, r.exploratory,
                        r.holds()});
      if (show_violations) {
        for (const auto& v : r.violations) viol.rows.push_back({id, v.index, v.subject, v.detail});
      }
      if (!r.holds()) o.status = std::max(o.status, 1);
    } catch (const PrecisionExhausted& e) {
      o.doc.notes.push_back(fmt::format("incomplete: {}: {}", id, e.what()));
      o.status = 2;
      break;
    }
  }
  o.doc.tables.push_back(std::move(t));
  if (show_violations) o.doc.tables.push_back(std::move(viol));
  return o;
}

Outcome cmd_remarks(const RunConfig& cfg) {
  const RemarkReport r = replicate_remarks(load_sa(cfg));
  Outcome o;
  Table t{"remarks", {"check", "passed", "detail"}, {}};
  for (const auto& c : r.checks) t.rows.push_back({c.name, c.passed, c.detail});
  o.doc.tables.push_back(std::move(t));
  o.status = r.all_passed() ? 0 : 1;
  return o;
}

Outcome cmd_stats(const RunConfig& cfg) {
  const ClassifiedList list = load_sa(cfg);
  ClassifiedList xa, ca;
  xa.horizon = ca.horizon = list.horizon;
  for (const auto& e : list.entries) {
    if (e.flags & kXA) xa.entries.push_back(e);
    if (e.flags & kCA) ca.entries.push_back(e);
  }
  const double h = list.horizon.value_or(cfg.max_log);
  const CountStatistics c = count_statistics(xa, ca, h);
  Outcome o;
  o.doc.tables.push_back({"counts",
                          {"horizon", "sa", "xa", "ca", "ca_and_xa", "ca_not_xa", "xa_not_ca"},
                          {{fmt::format("{}", h), list.count(kSA), c.xa, c.ca, c.ca_and_xa,
                            c.ca_not_xa, c.xa_not_ca}}});
  const bool ok = c.ca == c.ca_and_xa + c.ca_not_xa && c.xa == c.ca_and_xa + c.xa_not_ca;
  o.status = ok ? 0 : 1;
  return o;
}

Outcome cmd_oracle(const RunConfig&, const std::string& kind, std::uint64_t limit) {
  Outcome o;
  if (kind == "sa") {
    Table t{"sa", {"index", "n"}, {}};
    const auto v = brute_force_sa(limit);
    for (std::size_t i = 0; i < v.size(); ++i) t.rows.push_back({i + 1, v[i]});
    o.doc.tables.push_back(std::move(t));
  } else if (kind == "robin") {
    const RobinSieveReport r = brute_force_robin(limit);
    Table t{"robin", {"n", "range"}, {}};
    for (auto n : r.violations_small) t.rows.push_back({n, "n <= 5040"});
    for (auto n : r.violations_large) t.rows.push_back({n, "n > 5040"});
    o.doc.tables.push_back(std::move(t));
    if (r.max_f_point != 0) {
      o.doc.notes.push_back(
          fmt::format("max f on (5040, {}] is {:.9f} at {}", limit, r.max_f, r.max_f_point));
    }
    o.status = r.violations_large.empty() ? 0 : 1;
  } else {
    throw DomainError("unknown oracle: " + kind);
  }
  return o;
}

Outcome cmd_table1(const RunConfig& cfg) {
  const ClassifiedList list = load_sa(cfg);
  std::vector<ListEntry> xa;
  for (const auto& e : list.entries)
    if (e.flags & kXA) xa.push_back(e);
  if (xa.size() < 10) {
    throw HorizonInsufficient(
        fmt::format("only {} XA numbers up to log n = {}; need max-log >= 158.7", xa.size(),
                    list.horizon.value_or(0)));
  }
  Table t{"table1", {"row", "n", "type", "f", "p", "log_n", "k2"}, {}};
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& n = xa[i].n;
    std::string text = number_text(n, Notation::Primorial);
    if (approx_log_n(n) < 20) text += "=" + materialize(n).get_str();
    t.rows.push_back({i + 1, text, (xa[i].flags & kCA) ? "c" : "s",
                      digits(f_value(n, cfg.precision_bits), 6), n.largest_prime(),
                      digits(log_n(n, cfg.precision_bits), 6), n.k2()});
  }
  Outcome o;
  o.doc.tables.push_back(std::move(t));
  return o;
}

}  // namespace abundant::cli
