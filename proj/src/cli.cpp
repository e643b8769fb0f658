#include "flagslice/cli.hpp"

#include <algorithm>
#include <sstream>

#include "flagslice/geometry.hpp"
#include "flagslice/parallel.hpp"
#include "flagslice/slmh.hpp"
#include "flagslice/slnr.hpp"
#include "flagslice/supq.hpp"
#include "flagslice/verify.hpp"

namespace flagslice {

using nlohmann::json;

Command parse_command(const std::string& text) {
  if (text == "enumerate") return Command::enumerate;
  if (text == "points") return Command::points;
  if (text == "count") return Command::count;
  if (text == "homology") return Command::homology;
  if (text == "verify") return Command::verify;
  throw ConfigError("unknown command '" + text + "'");
}

std::string to_string(Command command) {
  switch (command) {
    case Command::enumerate: return "enumerate";
    case Command::points: return "points";
    case Command::count: return "count";
    case Command::homology: return "homology";
    case Command::verify: return "verify";
  }
  return {};
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("orbit counts must be comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

OrbitDescriptor parse_orbit_counts(const std::string& text, int p, int q) {
  const auto colon = text.find(':');
  return OrbitDescriptor(p, q, parse_ints(text.substr(0, colon)), parse_ints(text.substr(colon + 1)));
}

bool complete(const DimensionSequence& d) { return d.is_full(); }

}  // namespace

ResolvedConfig resolve(const RunConfig& cfg) {
  ResolvedConfig r;
  r.raw = cfg;
  try {
    if (cfg.form == RealForm::supq) {
      if (cfg.n) throw ConfigError("supq takes --p and --q, not --n");
      if (!cfg.p || !cfg.q) throw ConfigError("supq requires --p and --q");
      r.p = *cfg.p;
      r.q = *cfg.q;
      if (r.q < 1 || r.p < r.q) throw ConfigError("supq requires p >= q >= 1");
      r.n = r.p + r.q;
    } else {
      if (cfg.p || cfg.q) throw ConfigError(to_string(cfg.form) + " takes --n, not --p/--q");
      if (cfg.orbit) throw ConfigError("--orbit applies to supq only");
      if (!cfg.n && cfg.command != Command::verify) throw ConfigError(to_string(cfg.form) + " requires --n");
      r.n = cfg.n.value_or(2);
      if (r.n < 2) throw ConfigError("n must be at least 2");
      if (cfg.form == RealForm::slmh && r.n % 2) throw ConfigError("slmh requires even n");
    }
    if (r.n > 64) throw ConfigError("n must be at most 64");
    if (cfg.orbit) {
      r.orbit = cfg.orbit->find(':') != std::string::npos ? parse_orbit_counts(*cfg.orbit, r.p, r.q)
                                                           : descriptor_of(SignSequence::parse(*cfg.orbit));
      if (r.orbit->p != r.p || r.orbit->q != r.q)
        throw ConfigError("orbit signature does not match (p,q)");
    }
    if (cfg.dims) {
      r.dims = parse_dimension_sequence(*cfg.dims);
      if (r.dims.n() != r.n) throw ConfigError("--dims must sum to n");
      if (r.orbit && !(r.orbit->dims() == r.dims)) throw ConfigError("--dims disagrees with the orbit's block sizes");
    } else {
      r.dims = r.orbit ? r.orbit->dims() : DimensionSequence::full(r.n);
    }
    if (r.dims.size() == 1 && cfg.command != Command::verify && cfg.command != Command::count)
      throw ConfigError("--dims must have at least two blocks");
    if (cfg.form == RealForm::supq && cfg.command == Command::homology && !r.orbit && !complete(r.dims))
      throw ConfigError("supq homology of a partial flag needs --orbit");
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (!cfg.inject_fault.empty() && cfg.inject_fault != "spacing" && cfg.inject_fault != "spacing_h" &&
      cfg.inject_fault != "pairing")
    throw ConfigError("--inject-fault must be spacing, spacing_h or pairing");
  return r;
}

namespace {

json context_of(const ResolvedConfig& cfg) {
  json c{{"form", to_string(cfg.raw.form)}, {"n", cfg.n}, {"dims", cfg.dims.parts()}};
  if (cfg.raw.form == RealForm::supq) {
    c["p"] = cfg.p;
    c["q"] = cfg.q;
  }
  if (cfg.orbit) c["orbit"] = sign_sequence_of(*cfg.orbit).to_string();
  return c;
}

std::vector<Column> word_columns() {
  return {{"index", CellKind::integer}, {"word", CellKind::text}, {"blocks", CellKind::text},
          {"length", CellKind::integer}};
}

std::vector<json> word_cells(std::size_t index, const Permutation& w, const DimensionSequence& d) {
  return {index, to_string(w), to_block_string(w, d), inversion_length(w)};
}

struct Variety {
  Permutation w;
  std::string orbit;  // empty unless supq
  std::optional<FlagMatrix> point;
};

std::vector<OrbitDescriptor> orbits_for(const ResolvedConfig& cfg) {
  if (cfg.orbit) return {*cfg.orbit};
  return all_descriptors(cfg.p, cfg.q, cfg.dims);
}

std::vector<Variety> su_orbit_varieties(const ResolvedConfig& cfg) {
  std::vector<Variety> out;
  for (const auto& desc : orbits_for(cfg)) {
    const auto label = sign_sequence_of(desc).to_string();
    auto list = complete(cfg.dims) ? enumerate_for_orbit(sign_sequence_of(desc)) : enumerate_for_orbit_gp(desc);
    std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.w < y.w; });
    for (auto& v : list) out.push_back({v.w, label, v.point});
  }
  return out;
}

std::vector<Permutation> enumerate_words(const ResolvedConfig& cfg) {
  switch (cfg.raw.form) {
    case RealForm::slnr: return enumerate_slnr(cfg.dims);
    case RealForm::slmh: return enumerate_slmh(cfg.dims);
    case RealForm::supq: return enumerate_I_pq(cfg.p, cfg.q);
  }
  return {};
}

bool per_orbit(const ResolvedConfig& cfg) {
  return cfg.raw.form == RealForm::supq && (cfg.orbit || !complete(cfg.dims));
}

}  // namespace

Table cmd_enumerate(const ResolvedConfig& cfg) {
  Table t;
  t.context = context_of(cfg);
  t.columns = word_columns();
  if (per_orbit(cfg)) {
    t.columns.insert(t.columns.begin() + 1, {"orbit", CellKind::text});
    std::size_t i = 0;
    for (const auto& v : su_orbit_varieties(cfg)) {
      auto cells = word_cells(++i, v.w, cfg.dims);
      cells.insert(cells.begin() + 1, v.orbit);
      t.rows.push_back(std::move(cells));
    }
    return t;
  }
  auto words = enumerate_words(cfg);
  std::sort(words.begin(), words.end());
  std::size_t i = 0;
  for (const auto& w : words) t.rows.push_back(word_cells(++i, w, cfg.dims));
  return t;
}

Table cmd_points(const ResolvedConfig& cfg) {
  Table t;
  t.context = context_of(cfg);
  t.columns = word_columns();
  t.columns.push_back({"orbit", CellKind::text});
  t.columns.push_back({"point", CellKind::integer});
  t.columns.push_back({"orientation", CellKind::integer});
  t.columns.push_back({"flag", CellKind::json});
  struct Entry {
    std::string orbit;
    int orientation = 0;
    FlagMatrix flag;
  };
  std::vector<Variety> varieties;
  if (per_orbit(cfg)) {
    varieties = su_orbit_varieties(cfg);
  } else {
    auto words = enumerate_words(cfg);
    std::sort(words.begin(), words.end());
    for (auto& w : words) varieties.push_back({w, {}, std::nullopt});
  }
  const auto c = classify_symmetry(cfg.dims);
  auto entries = parallel_map(varieties.size(), [&](std::size_t i) {
    const auto& v = varieties[i];
    std::vector<Entry> out;
    if (v.point) {
      out.push_back({v.orbit, 0, *v.point});
    } else if (cfg.raw.form == RealForm::slnr && complete(cfg.dims)) {
      for (auto& pt : intersection_points_gb(v.w)) out.push_back({"", pt.orientation, pt.flag});
    } else if (cfg.raw.form == RealForm::slnr) {
      const bool oriented = c.kind == SymmetryClassification::Kind::symmetric_d && cfg.n % 2 == 0;
      for (auto& f : intersection_points(v.w, cfg.dims)) out.push_back({"", oriented ? orientation_class(f) : 0, f});
    } else if (cfg.raw.form == RealForm::slmh) {
      out.push_back({"", 0, complete(cfg.dims) ? intersection_point_h(v.w) : intersection_point_h(v.w, cfg.dims)});
    } else {
      for (auto& f : t_w(v.w, cfg.p, cfg.q))
        out.push_back({sign_sequence_of(*open_orbit_label(f, cfg.p, cfg.q)).to_string(), 0, f});
    }
    return out;
  });
  for (std::size_t i = 0; i < varieties.size(); ++i) {
    int k = 0;
    for (const auto& e : entries[i]) {
      auto cells = word_cells(i + 1, varieties[i].w, cfg.dims);
      cells.push_back(e.orbit);
      cells.push_back(++k);
      cells.push_back(e.orientation);
      cells.push_back(e.flag.to_json());
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

Table cmd_count(const ResolvedConfig& cfg) {
  Table t;
  t.context = context_of(cfg);
  t.columns = {{"count", CellKind::integer}, {"method", CellKind::text}};
  if (complete(cfg.dims) && !cfg.orbit) {
    std::uint64_t value = 0;
    switch (cfg.raw.form) {
      case RealForm::slnr: value = skip_factorial(cfg.n); break;
      case RealForm::slmh: value = factorial(cfg.n / 2); break;
      case RealForm::supq: value = strictly_pairing_count(cfg.p, cfg.q); break;
    }
    t.rows.push_back({value, "formula"});
    return t;
  }
  if (cfg.dims.size() == 1) throw ConfigError("--dims must have at least two blocks");
  const std::size_t value = per_orbit(cfg) ? su_orbit_varieties(cfg).size() : enumerate_words(cfg).size();
  t.rows.push_back({value, "enumeration"});
  return t;
}

HomologyExpansion cmd_homology(const ResolvedConfig& cfg) {
  if (cfg.raw.form == RealForm::supq && !cfg.orbit) return total_cycle_class_su(cfg.p, cfg.q);
  FormParams params{cfg.n, cfg.p, cfg.q};
  return base_cycle_class(cfg.raw.form, params, cfg.dims, cfg.orbit);
}

std::string render_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i].name] = row[i];
    rows.push_back(std::move(r));
  }
  json columns = json::array();
  for (const auto& c : table.columns) columns.push_back(c.name);
  json out{{"context", table.context}, {"columns", columns}, {"rows", rows}};
  return out.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_text(const json& cell) { return cell.is_string() ? cell.get<std::string>() : cell.dump(); }

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + csv_escape(table.columns[i].name);
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(cell_text(row[i]));
    out += '\n';
  }
  return out;
}

std::vector<std::vector<json>> parse_csv(const std::string& text, const std::vector<Column>& columns) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch == '"') {
      quoted = any = true;
    } else if (ch == ',') {
      record.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (ch == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      cell += ch;
      any = true;
    }
  }
  if (any) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw InvalidArgument("empty csv");
  std::vector<std::vector<json>> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != columns.size()) throw InvalidArgument("csv row width mismatch");
    std::vector<json> row;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& c = records[r][i];
      if (columns[i].kind == CellKind::text)
        row.emplace_back(c);
      else
        row.push_back(json::parse(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RunResult run(const RunConfig& cfg) {
  try {
    const auto r = resolve(cfg);
    const auto emit = [&](const Table& t) { return cfg.format == OutputFormat::json ? render_json(t) : render_csv(t); };
    switch (cfg.command) {
      case Command::enumerate: return {0, emit(cmd_enumerate(r))};
      case Command::points: return {0, emit(cmd_points(r))};
      case Command::count: return {0, emit(cmd_count(r))};
      case Command::homology: {
        const auto h = cmd_homology(r);
        if (cfg.format == OutputFormat::json) return {0, h.to_json().dump(2) + "\n"};
        Table t;
        t.columns = {{"coefficient", CellKind::integer}, {"class", CellKind::text}};
        for (const auto& w : h.classes) t.rows.push_back({h.coefficient, to_string(w)});
        return {0, render_csv(t)};
      }
      case Command::verify: {
        VerifyOptions opts;
        opts.seed = cfg.seed;
        opts.inject_fault = cfg.inject_fault;
        const auto results = run_verification(opts);
        const bool ok = std::all_of(results.begin(), results.end(), [](const auto& x) { return x.passed; });
        std::string out;
        if (cfg.format == OutputFormat::json) {
          json checks = json::array();
          for (const auto& x : results)
            checks.push_back({{"name", x.name}, {"passed", x.passed}, {"cases", x.cases}, {"witness", x.witness},
                              {"note", x.note}});
          out = json{{"seed", cfg.seed}, {"passed", ok}, {"checks", checks}}.dump(2) + "\n";
        } else {
          out = format_report(results);
        }
        return {ok ? 0 : 3, out};
      }
    }
  } catch (const InvalidArgument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {2, "error: unknown command\n"};
}

}  // namespace flagslice
