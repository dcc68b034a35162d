// abundant: generate and check SA/CA/XA numbers from the command line.
//
// Exit status: 0 all asserted checks pass, 1 a violation was found,
// 2 an error stopped the run (precision, resources, bad input).

#include <algorithm>
#include <fstream>
#include <map>
#include <iostream>

#include <CLI11.hpp>

#include "abundant/errors.hpp"
#include "commands.hpp"

using namespace abundant;
using namespace abundant::cli;

namespace {

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superabundant, colossally abundant and extremely abundant numbers"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with option defaults");

  RunConfig cfg;
  std::string format = "text", notation = "primorial", output;
  std::vector<std::string> inputs;
  app.add_option("--format", format, "csv, json, tsv or text")->capture_default_str();
  app.add_option("--notation", notation, "pp or primorial")->capture_default_str();
  app.add_option("--precision", cfg.precision_bits, "starting MPFR precision in bits")
      ->capture_default_str();
  app.add_option("--sieve-limit", cfg.sieve_limit, "prime table limit")->capture_default_str();
  app.add_option("--max-log", cfg.max_log, "horizon on log n")->capture_default_str();
  std::string cache;
  app.add_option("--cache-dir", cache, "cache directory")->envname("ABUNDANT_CACHE_DIR");
  app.add_option("--input", inputs, "external SA list instead of generating one");
  app.add_option("-o,--output", output, "write to a file instead of stdout");

  std::function<Outcome()> action;

  for (const char* kind : {"sa", "ca", "xa"}) {
    auto* k = app.add_subcommand(kind, std::string(kind) + " numbers");
    k->require_subcommand(1);
    auto* g = k->add_subcommand("generate", "list the numbers up to the horizon");
    auto count = std::make_shared<std::size_t>(0);
    auto exp = std::make_shared<std::string>();
    if (std::string(kind) == "ca") g->add_option("--count", *count, "first COUNT CA numbers");
    g->add_option("--export", *exp, "also write the list file");
    g->callback([&, kind, count, exp] {
      action = [&, kind, count, exp] {
        return cmd_generate(cfg, kind, *count ? std::optional<std::size_t>(*count) : std::nullopt,
                            exp->empty() ? std::nullopt
                                         : std::optional<std::filesystem::path>(*exp));
      };
    });
  }

  std::string criterion;
  std::uint64_t from = 0, to = 0;
  auto* check = app.add_subcommand("check", "scan a criterion over a range");
  check->add_option("criterion", criterion, "robin, robin-refined, lagarias or nicolas")
      ->required()
      ->check(CLI::IsMember({"robin", "robin-refined", "lagarias", "nicolas"}));
  check->add_option("--from", from)->required();
  check->add_option("--to", to)->required();
  check->callback([&] { action = [&] { return cmd_check(cfg, criterion, from, to); }; });

  std::string ids;
  auto* bounds = app.add_subcommand("bounds", "verify analytic bounds pointwise");
  bounds->add_option("--ids", ids, "comma separated, default all");
  bounds->add_option("--from", from)->default_val(2);
  bounds->add_option("--to", to)->required();
  bounds->callback([&] { action = [&] { return cmd_bounds(cfg, split_ids(ids), from, to); }; });

  auto* props = app.add_subcommand("properties", "experimental property suite");
  props->require_subcommand(1);
  std::string population = "natural";
  bool show = false;
  auto* run = props->add_subcommand("run", "run properties on a population");
  run->add_option("--ids", ids, "comma separated, default all");
  run->add_option("--population", population, "sa, xa, ca or natural")->capture_default_str();
  run->add_flag("--violations", show, "list every violation");
  run->callback([&] {
    action = [&] {
      if (population != "natural") {
        return cmd_properties(cfg, split_ids(ids), parse_population(population), show);
      }
      // Each property on the population it was stated for.
      std::vector<std::string> want = split_ids(ids);
      Outcome all;
      for (Population p : {Population::XA, Population::SA}) {
        std::vector<std::string> sel;
        for (const auto& info : property_registry()) {
          const bool asked = want.empty() || std::find(want.begin(), want.end(), info.id) != want.end();
          if (asked && info.natural == p) sel.push_back(info.id);
        }
        if (sel.empty()) continue;
        Outcome o = cmd_properties(cfg, sel, p, show);
        if (all.doc.tables.empty()) {
          all.doc = std::move(o.doc);
        } else {
          for (std::size_t t = 0; t < o.doc.tables.size(); ++t) {
            auto& rows = all.doc.tables[t].rows;
            rows.insert(rows.end(), o.doc.tables[t].rows.begin(), o.doc.tables[t].rows.end());
          }
          all.doc.notes.insert(all.doc.notes.end(), o.doc.notes.begin(), o.doc.notes.end());
        }
        all.status = std::max(all.status, o.status);
        if (o.status == 2) break;
      }
      // back to registry order
      std::map<std::string, std::size_t> rank;
      for (const auto& info : property_registry()) rank.emplace(info.id, rank.size());
      for (auto& t : all.doc.tables) {
        std::stable_sort(t.rows.begin(), t.rows.end(), [&](const auto& a, const auto& b) {
          return rank[a[0].template get<std::string>()] < rank[b[0].template get<std::string>()];
        });
      }
      return all;
    };
  });
  props->add_subcommand("remarks", "replicate the worked remarks on XA numbers")->callback([&] {
    action = [&] { return cmd_remarks(cfg); };
  });

  app.add_subcommand("stats", "CA/XA count statistics on the list")->callback([&] {
    action = [&] { return cmd_stats(cfg); };
  });

  std::string oracle_kind;
  std::uint64_t limit = 0;
  auto* oracle = app.add_subcommand("oracle", "divisor-sum sieve references");
  oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"sa", "robin"}));
  oracle->add_option("--limit", limit)->required();
  oracle->callback([&] { action = [&] { return cmd_oracle(cfg, oracle_kind, limit); }; });

  app.add_subcommand("table1", "first 10 extremely abundant numbers")->callback([&] {
    action = [&] { return cmd_table1(cfg); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << '\n';
      return 2;
    }
    out = &file;
  }

  ReportFormat fmt_out = ReportFormat::Text;
  try {
    fmt_out = parse_format(format);
    cfg.notation = parse_notation(notation);
    cfg.cache_dir = cache;
    for (const auto& p : inputs) cfg.inputs.emplace_back(p);
    cfg.validate();
    const Outcome o = action();
    render(o.doc, fmt_out, *out);
    return o.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    Document trailer;
    trailer.notes.push_back(std::string("incomplete: ") + e.what());
    render(trailer, fmt_out, *out);
    return 2;
  }
}
