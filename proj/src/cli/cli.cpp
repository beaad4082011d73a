#include "confblocks/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "confblocks/cb.hpp"
#include "confblocks/nefgeo.hpp"
#include "confblocks/qgrass.hpp"
#include "confblocks/schur.hpp"

namespace confblocks::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Document {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::string text_footer;
};

std::string flag(bool b) { return b ? "true" : "false"; }

std::vector<SlWeight> parse_weights(const std::string& text, int r) {
  std::vector<SlWeight> out;
  if (text.empty()) return out;
  for (const auto& piece : split_top_level(text, ',')) out.push_back(parse_weight(piece, r));
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_weights(const std::vector<SlWeight>& ws) {
  std::vector<std::string> parts;
  for (const auto& w : ws) parts.push_back(w.to_string());
  return join(parts);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Every result is either a flat object of strings or {"rows": [flat objects]}.
std::vector<Json> result_rows(const Json& results) {
  if (results.contains("rows")) return results["rows"].get<std::vector<Json>>();
  return {results};
}

void emit_csv(const Document& doc, std::ostream& out) {
  const auto rows = result_rows(doc.results);
  if (rows.empty()) return;
  std::vector<std::string> header;
  for (const auto& [k, v] : rows.front().items()) header.push_back(csv_field(k));
  out << join(header) << '\n';
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& [k, v] : row.items()) cells.push_back(csv_field(v.get<std::string>()));
    out << join(cells) << '\n';
  }
}

void emit_text(const Document& doc, std::ostream& out) {
  if (!doc.results.contains("rows")) {
    for (const auto& [k, v] : doc.results.items()) out << k << ": " << v.get<std::string>() << '\n';
  } else {
    const auto rows = result_rows(doc.results);
    if (!rows.empty()) {
      std::vector<std::string> keys;
      for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
      std::vector<std::size_t> width(keys.size());
      for (std::size_t c = 0; c < keys.size(); ++c) {
        width[c] = keys[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[keys[c]].get<std::string>().size());
      }
      auto line = [&](auto cell) {
        std::string s;
        for (std::size_t c = 0; c < keys.size(); ++c) {
          std::string v = cell(c);
          if (c + 1 < keys.size()) v.resize(width[c] + 2, ' ');
          s += v;
        }
        out << s << '\n';
      };
      line([&](std::size_t c) { return keys[c]; });
      for (const auto& row : rows) line([&](std::size_t c) { return row[keys[c]].get<std::string>(); });
    }
  }
  if (!doc.text_footer.empty()) out << doc.text_footer << '\n';
}

void emit(const Document& doc, const std::string& format, long long elapsed_ms, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["query"] = {{"command", doc.command}, {"parameters", doc.parameters}};
    j["results"] = doc.results;
    j["meta"] = {{"version", kVersion}, {"elapsed_ms", std::to_string(elapsed_ms)}};
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    emit_csv(doc, out);
  } else {
    emit_text(doc, out);
  }
}

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Document table_document() {
  const auto& table = reference_table();
  std::vector<Json> rows(table.size());
  std::vector<int> passes(table.size(), 0);
  std::vector<int> cells(table.size(), 0);
  parallel_for(table.size(), [&](std::size_t i) {
    const ReferenceRow& ref = table[i];
    std::vector<SlWeight> ws;
    for (const auto& w : ref.weights) ws.push_back(parse_weight(w, ref.r));
    const BlockSetup setup(ref.r, ref.level, ws);
    const PartnerData pd = partner(setup, true);
    Json row;
    auto cell = [&](const char* name, const std::string& got, const std::string& want) {
      const bool ok = got == want;
      row[name] = got;
      row[std::string(name) + "_check"] = ok ? "PASS" : "FAIL";
      passes[i] += ok;
      ++cells[i];
    };
    row["row"] = std::to_string(i + 1);
    row["r_plus_1"] = std::to_string(ref.r + 1);
    row["level_plus_1"] = std::to_string(ref.level + 1);
    row["n"] = std::to_string(ws.size());
    row["weights"] = join_weights(ws);
    const auto crit = critical_level(ref.r, ws);
    cell("critical_level", crit ? std::to_string(*crit) : "undefined", std::to_string(ref.level));
    cell("rank_classical", to_string(pd.rank_classical), std::to_string(ref.rank_classical));
    cell("rank_block", to_string(pd.rank_source), std::to_string(ref.rank_block));
    cell("rank_partner", to_string(pd.rank_partner), std::to_string(ref.rank_partner));
    const std::string deg = ws.size() == 4 ? to_string(degree_m04(ref.r, ref.level, ws).degree) : "*";
    cell("degree", deg, ref.degree < 0 ? "*" : std::to_string(ref.degree));
    rows[i] = std::move(row);
  });
  Document doc;
  doc.command = "table";
  doc.results["rows"] = rows;
  int pass = 0;
  int total = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    pass += passes[i];
    total += cells[i];
  }
  doc.text_footer = std::string(pass == total ? "PASS" : "FAIL") + ": " + std::to_string(pass) + "/" +
                    std::to_string(total) + " cells match";
  return doc;
}

bool table_passes(const Document& doc) {
  for (const auto& row : doc.results["rows"]) {
    for (const auto& [k, v] : row.items()) {
      if (k.size() > 6 && k.ends_with("_check") && v.get<std::string>() != "PASS") return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
      {2, 1, {"w1", "w1", "w1", "w1", "w1", "w1"}, 5, 1, 4, -1},
      {2, 1, {"w1", "w1", "w2", "w2"}, 2, 1, 1, 1},
      {3, 3, {"w1", "2w1+w3", "2w1+w3", "2w1+w3"}, 2, 1, 1, 0},
      {2, 5, {"2w1+w2", "w2", "2w1", "2w2", "3w2"}, 7, 7, 0, -1},
      {2, 4, {"2w1+w2", "w2", "2w1", "2w2", "w1+w2"}, 9, 8, 1, -1},
      {3, 3, {"w2+w3", "w1", "w1+2w2", "2w1+w3"}, 2, 1, 1, 0},
      {3, 4, {"w1", "2w1+w2+w3", "3w1+w3", "3w1+w3"}, 2, 1, 1, 0},
      {3, 4, {"w1+w3", "2w1+2w2", "2w1+2w2", "4w1"}, 4, 1, 3, 1},
      {2, 5, {"2w1", "2w1", "2w1", "2w1", "2w1", "2w1", "w2", "2w2"}, 150, 136, 14, -1},
  };
  return rows;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CONFBLOCKS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_for(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (...) {
    err << "internal error: unknown failure\n";
    return kInternal;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranks, levels and degrees of type-A conformal block bundles", "confblocks"};
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  int r = 0;
  int level = 0;
  std::string weights;
  auto block_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--r", r, "Algebra rank (sl_{r+1})")->required();
    sub->add_option("--level", level, "Level")->required();
    sub->add_option("--weights", weights, "Comma-separated weights, e.g. w1,2w1+w3,[3,1]")->required();
    return sub;
  };

  CLI::App* rank_cmd = block_command("rank", "Block rank, optionally with the classical rank");
  bool classical_only = false;
  std::string method = "fusion";
  rank_cmd->add_flag("--classical", classical_only, "Only the coinvariant rank");
  rank_cmd->add_option("--method", method)->check(CLI::IsMember({"fusion", "witten", "both"}));

  CLI::App* degree_cmd = block_command("degree", "Degree over the 4-pointed moduli space");
  CLI::App* vanish_cmd = block_command("vanish", "Critical/theta levels and the vanishing report");
  CLI::App* partner_cmd = block_command("partner", "Critical-level partner and the rank identity");
  bool force = false;
  partner_cmd->add_flag("--force", force, "Skip the critical-level precondition");

  CLI::App* fcurve_cmd = block_command("fcurve", "F-curve contraction criterion");
  std::string curve;
  std::string mode = "typeA";
  fcurve_cmd->add_option("--curve", curve, "Blocks like 1|2|3|4,5,6")->required();
  fcurve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"typeA", "theta"}));

  CLI::App* hassett_cmd = block_command("hassett", "Hassett weight data");
  hassett_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"typeA", "theta"}));

  CLI::App* gw_cmd = app.add_subcommand("gw", "Genus-0 Gromov-Witten invariant of a Grassmannian");
  gw_cmd->fallthrough();
  std::vector<int> grassmannian;
  std::string classes;
  int qdegree = 0;
  gw_cmd->add_option("--grassmannian", grassmannian, "K,N for Gr(K,N)")->required()->delimiter(',')->expected(2);
  gw_cmd->add_option("--classes", classes, "Schubert classes like [2];[1,1];[2,2]")->required();
  gw_cmd->add_option("--qdegree", qdegree)->required();

  CLI::App* table_cmd = app.add_subcommand("table", "Recompute the reference table with PASS/FAIL per cell");
  table_cmd->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Document doc;
    std::vector<SlWeight> ws;
    auto block_params = [&](const char* name) {
      doc.command = name;
      ws = parse_weights(weights, r);
      doc.parameters["r"] = std::to_string(r);
      doc.parameters["level"] = std::to_string(level);
      doc.parameters["weights"] = join_weights(ws);
    };

    if (rank_cmd->parsed()) {
      block_params("rank");
      doc.parameters["method"] = classical_only ? "classical" : method;
      const BlockSetup setup(r, level, ws);
      if (!classical_only) {
        std::optional<BigInt> fused;
        std::optional<BigInt> witten;
        if (method != "witten") fused = cb_rank(setup);
        if (method != "fusion") witten = witten_rank(setup);
        if (fused && witten && *fused != *witten) {
          throw ConsistencyError("fusion rank " + to_string(*fused) + " != Witten rank " + to_string(*witten));
        }
        if (fused) doc.results["rank_cb"] = to_string(*fused);
        if (witten) doc.results["rank_witten"] = to_string(*witten);
      }
      doc.results["rank_classical"] = to_string(coinvariant_rank(r, ws));
    } else if (degree_cmd->parsed()) {
      block_params("degree");
      const DegreeBreakdown d = degree_m04(r, level, ws);
      doc.results["degree"] = to_string(d.degree);
      doc.results["rank"] = to_string(d.rank);
      doc.results["bulk_term"] = to_string(d.bulk_term);
      doc.results["pairing_12_34"] = to_string(d.pairing_terms[0]);
      doc.results["pairing_13_24"] = to_string(d.pairing_terms[1]);
      doc.results["pairing_14_23"] = to_string(d.pairing_terms[2]);
    } else if (vanish_cmd->parsed()) {
      block_params("vanish");
      const VanishingReport rep = vanishing_report(BlockSetup(r, level, ws));
      doc.results["critical_level"] = rep.critical_level ? std::to_string(*rep.critical_level) : "undefined";
      doc.results["theta_level"] = to_string(rep.theta_level);
      doc.results["above_critical"] = flag(rep.above_critical);
      doc.results["above_theta"] = flag(rep.above_theta);
      doc.results["rank_classical"] = to_string(rep.rank_classical);
      doc.results["rank_cb"] = to_string(rep.rank_cb);
      doc.results["ranks_equal"] = flag(rep.ranks_equal);
    } else if (partner_cmd->parsed()) {
      block_params("partner");
      doc.parameters["force"] = flag(force);
      const PartnerData pd = partner(BlockSetup(r, level, ws), force);
      doc.results["partner_r"] = std::to_string(pd.partner.r());
      doc.results["partner_level"] = std::to_string(pd.partner.level());
      doc.results["partner_weights"] = join_weights(pd.partner.weights());
      doc.results["rank_source"] = to_string(pd.rank_source);
      doc.results["rank_partner"] = to_string(pd.rank_partner);
      doc.results["rank_classical"] = to_string(pd.rank_classical);
      doc.results["identity_holds"] = flag(pd.identity_holds);
    } else if (fcurve_cmd->parsed()) {
      block_params("fcurve");
      doc.parameters["curve"] = curve;
      doc.parameters["mode"] = mode;
      const FCurve f = FCurve::parse(curve, static_cast<int>(ws.size()));
      const ContractionCheck c =
          mode == "theta" ? contracts_theta(level, ws, f) : contracts_type_a(r, level, ws, f);
      std::vector<std::string> sums;
      for (const auto& s : c.sorted_block_sums) sums.push_back(to_string(s));
      doc.results["contracts"] = flag(c.contracts);
      doc.results["sorted_block_sums"] = join(sums);
      doc.results["bound"] = to_string(c.bound);
    } else if (hassett_cmd->parsed()) {
      block_params("hassett");
      doc.parameters["mode"] = mode;
      const BlockSetup setup(r, level, ws);
      const HassettWeights a = mode == "theta" ? hassett_weights_theta(level, ws) : hassett_weights_type_a(r, level, ws);
      std::vector<std::string> parts;
      for (const auto& x : a.weights()) parts.push_back(to_string(x));
      doc.results["weights"] = join(parts);
      doc.results["total"] = to_string(a.total());
    } else if (gw_cmd->parsed()) {
      doc.command = "gw";
      const int k = grassmannian.at(0);
      const int n = grassmannian.at(1);
      const GrassmannBox box(k, n);
      std::vector<Partition> cls;
      std::vector<std::string> echo;
      for (const auto& piece : split_top_level(classes, ';')) {
        cls.push_back(parse_partition(piece));
        echo.push_back(cls.back().to_string());
      }
      doc.parameters["grassmannian"] = std::to_string(k) + "," + std::to_string(n);
      doc.parameters["classes"] = join(echo, ';');
      doc.parameters["qdegree"] = std::to_string(qdegree);
      doc.results["gw_invariant"] = to_string(gw_invariant(box, cls, qdegree));
    } else if (table_cmd->parsed()) {
      doc = table_document();
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    emit(doc, format, elapsed, out);
    if (doc.command == "table" && !table_passes(doc)) return kInternal;
    return kOk;
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

}  // namespace confblocks::cli
