#pragma once

// wgtool: command-line front end.  Every command only loads inputs, calls the
// library and prints the result.
//
// Exit codes: 0 ok, 1 mathematical violation, 2 usage (including unreadable
// input files), 3 cap exceeded.

#include <filesystem>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "wg/acceptance.hpp"

namespace wg::cli {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::string command;
  std::string group;  // bundled name or path to a group file
  std::string table;  // path to a table file; defaults to the bundled table
  std::string xi;     // defaults to the trivial character
  std::string pi = "triv";
  int n = 1;
  Caps caps;
  std::string format = "csv";
  std::string out;
  std::string cache_dir;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Inputs {
  std::string group_bytes;
  std::string table_bytes;
  std::shared_ptr<CharacterTable> table;
};

inline Inputs load_inputs(const RunConfig& cfg) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  std::string group_path = cfg.group;
  std::string table_path = cfg.table;
  if (!std::filesystem::exists(group_path)) {
    group_path = std::string(WG_DATA_DIR) + "/groups/" + cfg.group + ".json";
    if (!std::filesystem::exists(group_path)) throw UsageError("no group file or bundled group named " + cfg.group);
    if (table_path.empty()) table_path = std::string(WG_DATA_DIR) + "/tables/" + cfg.group + ".json";
  }
  if (table_path.empty()) throw UsageError("--table is required with a group file");
  Inputs in;
  in.group_bytes = detail::read_file(group_path);
  in.table_bytes = detail::read_file(table_path);
  auto group = std::make_shared<const FiniteGroup>(
      group_from_json(detail::parse_json(in.group_bytes, group_path), group_path, cfg.caps));
  in.table = std::make_shared<CharacterTable>(
      table_from_json(group, detail::parse_json(in.table_bytes, table_path), table_path));
  return in;
}

inline int resolve_xi(const CharacterTable& t, const std::string& name) {
  if (name.empty()) {
    for (int r : linear_characters(t)) {
      bool trivial = true;
      for (int x = 0; x < t.group().order(); ++x) trivial = trivial && t.at(r, x) == CycNum(1);
      if (trivial) return r;
    }
    throw MathViolation("table has no trivial character");
  }
  auto r = t.find(name);
  if (!r) throw UsageError("no character named " + name);
  if (!is_linear(t, *r)) throw UsageError(name + " is not a linear character");
  return *r;
}

inline Pi resolve_pi(const std::string& name) {
  try {
    return parse_pi(name);
  } catch (const ParseError&) {
    throw UsageError("unknown pi '" + name + "' (expected triv, delta, iota or delta-iota)");
  }
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = load_inputs(cfg);  // group axioms are checked while loading
  const auto report = validate_table(*in.table);
  if (cfg.format == "json") {
    nlohmann::json j = {{"group", in.table->group().name()}, {"ok", report.ok()}, {"violations", report.violations}};
    emit(cfg, j.dump(1) + "\n", out);
  } else {
    std::string text = csv_line({"group", "status", "violation"});
    if (report.ok()) text += csv_line({in.table->group().name(), "ok", ""});
    for (const auto& v : report.violations) text += csv_line({in.table->group().name(), "violation", v});
    emit(cfg, text, out);
  }
  return report.ok() ? kOk : kViolation;
}

inline int cmd_nu2(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = load_inputs(cfg);
  const CharacterTable& t = *in.table;
  std::vector<int> xis = cfg.xi.empty() ? linear_characters(t) : std::vector<int>{resolve_xi(t, cfg.xi)};
  std::vector<std::vector<int>> values(t.size());
  for (int chi = 0; chi < t.size(); ++chi) {
    for (int xi : xis) values[chi].push_back(nu2(t, xi, chi));
  }
  if (cfg.format == "json") {
    nlohmann::json j = {{"group", t.group().name()}, {"chi", t.names()}, {"values", values}};
    j["xi"] = nlohmann::json::array();
    for (int xi : xis) j["xi"].push_back(t.name(xi));
    emit(cfg, j.dump(1) + "\n", out);
  } else {
    std::vector<std::string> head{"chi"};
    for (int xi : xis) head.push_back(t.name(xi));
    std::string text = csv_line(head);
    for (int chi = 0; chi < t.size(); ++chi) {
      std::vector<std::string> cells{t.name(chi)};
      for (int v : values[chi]) cells.push_back(std::to_string(v));
      text += csv_line(cells);
    }
    emit(cfg, text, out);
  }
  return kOk;
}

inline int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(cfg);
  const CharacterTable& t = *in.table;
  const Triple tr(t, {resolve_xi(t, cfg.xi), resolve_pi(cfg.pi)}, cfg.n);
  const WreathCharacters chars(t);
  const auto dec = decompose_induced(chars, tr.theta, cfg.n, cfg.caps);
  const auto expected = tr.rows();
  std::set<MultiPartition> support;
  bool simple = true;
  for (const auto& [label, mult] : dec) {
    support.insert(label);
    simple = simple && mult == 1;
  }
  const bool ok = simple && support == std::set<MultiPartition>(expected.begin(), expected.end());
  if (cfg.format == "json") {
    nlohmann::json j = {{"group", t.group().name()}, {"xi", t.name(tr.theta.xi)}, {"pi", pi_name(tr.theta.pi)},
                        {"n", cfg.n}, {"multiplicity_free", ok}};
    j["components"] = nlohmann::json::array();
    for (const auto& [label, mult] : dec) j["components"].push_back({{"label", tr.row_name(label)}, {"multiplicity", mult.get_str()}});
    emit(cfg, j.dump(1) + "\n", out);
  } else {
    std::string text = csv_line({"label", "multiplicity"});
    for (const auto& [label, mult] : dec) text += csv_line({tr.row_name(label), mult.get_str()});
    emit(cfg, text, out);
  }
  if (!ok) err << "decomposition is not multiplicity free on the expected index set\n";
  return ok ? kOk : kViolation;
}

inline int cmd_spherical(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = load_inputs(cfg);
  const CharacterTable& t = *in.table;
  const Triple tr(t, {resolve_xi(t, cfg.xi), resolve_pi(cfg.pi)}, cfg.n);
  std::optional<SphericalTable> table;
  std::string key;
  if (!cfg.cache_dir.empty()) {
    key = SphericalCache::key(in.group_bytes, in.table_bytes, t.name(tr.theta.xi), tr.theta.pi, cfg.n);
    table = SphericalCache(cfg.cache_dir).load(key);
  }
  if (!table) {
    table = spherical_table(tr, cfg.caps);
    if (!cfg.cache_dir.empty()) SphericalCache(cfg.cache_dir).store(key, *table);
  }
  emit(cfg, cfg.format == "json" ? table->to_json().dump(1) + "\n" : table->to_csv(), out);
  return kOk;
}

inline int cmd_reconcile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(cfg);
  const CharacterTable& t = *in.table;
  const Triple tr(t, {resolve_xi(t, cfg.xi), resolve_pi(cfg.pi)}, cfg.n);
  const auto rep = reconcile(tr, cfg.caps);
  if (cfg.format == "json") {
    emit(cfg, rep.to_json().dump(1) + "\n", out);
  } else {
    std::string text = csv_line({"row", "column", "brute", "closed", "symfunc"});
    for (std::size_t i = 0; i < rep.table.row_names.size(); ++i) {
      for (std::size_t k = 0; k < rep.table.column_names.size(); ++k) {
        text += csv_line({rep.table.row_names[i], rep.table.column_names[k], rep.table.values[i][k].to_string(),
                          rep.closed[i][k] ? rep.closed[i][k]->to_string() : "", rep.symfunc[i][k].to_string()});
      }
    }
    emit(cfg, text, out);
  }
  for (const auto& m : rep.mismatches) {
    err << "mismatch (" << m.what << ") at " << m.row << " / " << m.column << ": " << m.brute.to_string()
        << " vs " << m.other.to_string() << "\n";
  }
  for (const auto& v : rep.violations) err << "violation: " << v << "\n";
  return rep.ok() ? kOk : kViolation;
}

inline int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  int failed = 0;
  std::string text;
  for (const auto& c : acceptance::criteria()) {
    const auto r = acceptance::run(c, cfg.caps);
    text += acceptance::format(r) + "\n";
    failed += !r.pass;
  }
  emit(cfg, text, out);
  return failed == 0 ? kOk : kViolation;
}

/// Parses argv and runs one command; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Gelfand triples of wreath products: decompositions and spherical functions"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub, bool triple) {
    sub->add_option("--group", cfg.group, "bundled group name or group JSON file");
    sub->add_option("--table", cfg.table, "character table JSON file");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
    sub->add_option("--cap-elements", cfg.caps.elements);
    sub->add_option("--cap-classwork", cfg.caps.class_work);
    sub->add_option("--xi", cfg.xi, "linear character name (default: trivial)");
    if (triple) {
      sub->add_option("--pi", cfg.pi, "triv, delta, iota or delta-iota");
      sub->add_option("--n", cfg.n)->check(CLI::Range(0, 64));
    }
  };
  common(app.add_subcommand("validate", "check group axioms and character table orthogonality"), false);
  common(app.add_subcommand("nu2", "twisted Frobenius-Schur indicators"), false);
  common(app.add_subcommand("decompose", "decompose the induced character"), true);
  auto* sph = app.add_subcommand("spherical", "spherical function table");
  common(sph, true);
  sph->add_option("--cache-dir", cfg.cache_dir, "reuse tables keyed by input hashes");
  common(app.add_subcommand("reconcile", "cross-check the three engines"), true);
  auto* self = app.add_subcommand("selftest", "run the bundled acceptance checks");
  self->add_option("--out", cfg.out);
  self->add_option("--cap-elements", cfg.caps.elements);
  self->add_option("--cap-classwork", cfg.caps.class_work);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command != "selftest") resolve_pi(cfg.pi);
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "nu2") return cmd_nu2(cfg, out);
    if (cfg.command == "decompose") return cmd_decompose(cfg, out, err);
    if (cfg.command == "spherical") return cmd_spherical(cfg, out);
    if (cfg.command == "reconcile") return cmd_reconcile(cfg, out, err);
    return cmd_selftest(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const MathViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wg::cli
