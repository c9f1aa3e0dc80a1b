#include "semires/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "semires/errors.hpp"
#include "semires/indispensability.hpp"
#include "semires/invariants.hpp"
#include "semires/selftest.hpp"
#include "semires/serialize.hpp"

namespace semires::cli {

namespace {

NumericalSemigroup semigroup_arg(const std::string& text) {
  const auto g = parse_generators(text);
  return NumericalSemigroup::create(std::vector<Int>(g.begin(), g.end()));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<Int> to_vec(std::span<const Int> s) { return {s.begin(), s.end()}; }

struct ScanOptions {
  Int gens_max = 0;
  std::vector<std::size_t> dims;
  std::string class_filter;
  Int komeda_max = 0;
  Int bresinsky_max = 0;
  std::string format = "json";
  unsigned jobs = 0;
};

struct ScanRow {
  std::vector<Int> generators;
  std::string cls;
  Int frobenius = 0;
  std::size_t type = 0;
  std::optional<bool> verdict;
  std::optional<Witness> witness;
  std::string error;
  bool skip = false;
};

bool next_combination(std::vector<Int>& c, Int max) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < max - static_cast<Int>(k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<Int>> scan_inputs(const ScanOptions& o) {
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> out;
  auto push = [&](std::vector<Int> g) {
    auto key = g;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(g));
  };
  if (o.gens_max > 0) {
    for (std::size_t k : o.dims) {
      if (static_cast<Int>(k) > o.gens_max - 1) continue;
      std::vector<Int> c(k);
      std::iota(c.begin(), c.end(), Int{2});
      do {
        Int g = 0;
        for (Int v : c) g = std::gcd(g, v);
        if (g == 1) push(c);
      } while (next_combination(c, o.gens_max));
    }
  }
  if (o.komeda_max > 0) {
    const Int P = o.komeda_max;
    for (Int a1 = 2; a1 <= P; ++a1)
      for (Int a2 = 1; a2 <= P; ++a2)
        for (Int a3 = 1; a3 <= P; ++a3)
          for (Int a4 = 1; a4 <= P; ++a4)
            for (Int a21 = 1; a21 < a1; ++a21) try {
                const auto s = from_komeda({a1, a2, a3, a4, a21});
                push(to_vec(s.generators()));
              } catch (const InvalidParameters&) {
              }
  }
  if (o.bresinsky_max > 0) {
    const Int P = o.bresinsky_max;
    std::array<Int, 8> p{};
    p.fill(1);
    while (true) {
      try {
        const auto s = from_bresinsky({p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]});
        push(to_vec(s.generators()));
      } catch (const InvalidParameters&) {
      }
      std::size_t i = 0;
      while (i < 8 && p[i] == P) p[i++] = 1;
      if (i == 8) break;
      ++p[i];
    }
  }
  return out;
}

ScanRow scan_one(const std::vector<Int>& gens, const std::string& filter) {
  ScanRow row;
  row.generators = gens;
  std::optional<NumericalSemigroup> s;
  try {
    s = NumericalSemigroup::create(gens);
  } catch (const NonMinimalGenerator&) {
    row.skip = true;
    return row;
  }
  try {
    const auto c = classify(*s);
    row.cls = to_string(c.tag);
    if (!filter.empty() && filter != row.cls) {
      row.skip = true;
      return row;
    }
    row.frobenius = s->frobenius();
    row.type = s->type();
    if (c.tag == ClassTag::Unsupported) return row;
    const auto r = resolve(c);
    const auto cv = cross_validate(c, r);
    row.verdict = cv.closed_form.verdict;
    const auto bad = cv.differences.failing();
    if (!bad.empty()) row.witness = bad.front();
  } catch (const UnsupportedEmbeddingDimension&) {
    row.skip = true;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::string csv_generators(const std::vector<Int>& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out;
}

void write_row(std::ostream& out, const ScanRow& r, const std::string& format) {
  if (format == "csv") {
    out << '"' << csv_generators(r.generators) << "\"," << r.cls << "," << r.frobenius << ","
        << r.type << "," << (r.verdict ? (*r.verdict ? "true" : "false") : "") << ",";
    if (r.witness)
      out << '"' << "level " << r.witness->level << " (" << r.witness->pair[0] << ","
          << r.witness->pair[1] << ") diff " << r.witness->diff << '"';
    else if (!r.error.empty())
      out << "\"error: " << r.error << '"';
    out << "\n";
    return;
  }
  Json j{{"generators", r.generators},
         {"class", r.cls},
         {"frobenius", r.frobenius},
         {"type", r.type},
         {"verdict", r.verdict ? Json(*r.verdict) : Json(nullptr)}};
  j["witness"] = r.witness ? Json{{"level", r.witness->level},
                                  {"pair", r.witness->pair},
                                  {"diff", r.witness->diff},
                                  {"in_semigroup", r.witness->in_semigroup}}
                           : Json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  out << j.dump() << "\n";
}

int run_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  if (o.gens_max <= 0 && o.komeda_max <= 0 && o.bresinsky_max <= 0) {
    err << "scan: give --gens-max, --komeda or --bresinsky\n";
    return Usage;
  }
  if (!o.class_filter.empty()) class_tag_from_string(o.class_filter);
  const auto inputs = scan_inputs(o);
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<ScanRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) rows[i] = scan_one(inputs[i], o.class_filter);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (o.format == "csv") out << "generators,class,frobenius,type,verdict,witness\n";
  bool failed = false;
  for (const auto& r : rows) {
    if (r.skip) continue;
    if (!r.error.empty()) failed = true;
    write_row(out, r, o.format);
  }
  return failed ? Verification : Ok;
}

int print_selftest(std::ostream& out) {
  const auto checks = run_selftest();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << "[" << c.group << "] " << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (!c.passed) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed ? Verification : Ok;
}

}  // namespace

std::vector<long long> parse_generators(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto b = part.find_first_not_of(" \t");
    part = b == std::string::npos ? "" : part.substr(b, part.find_last_not_of(" \t") - b + 1);
    long long v = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    const auto [p, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || p != last)
      throw ParseError("generator list: '" + part + "' is not an integer");
    if (v <= 0) throw ZeroOrNegativeGenerator("generator list: " + part + " is not positive");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal free resolutions of numerical semigroup rings, embedding dimension up to 4"};
  app.require_subcommand(1);
  std::string gens;
  std::string format = "json";
  Int max_degree = -1;
  ScanOptions scan;

  auto gens_arg = [&](CLI::App* sub) {
    sub->add_option("generators", gens, "comma-separated generators, order preserved")->required();
  };
  auto* classify_cmd = app.add_subcommand("classify", "class and presentation parameters");
  gens_arg(classify_cmd);
  auto* resolve_cmd = app.add_subcommand("resolve", "explicit graded minimal free resolution");
  gens_arg(resolve_cmd);
  resolve_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* hilbert_cmd = app.add_subcommand("hilbert", "K-polynomial and truncated Hilbert series");
  gens_arg(hilbert_cmd);
  hilbert_cmd->add_option("--max-degree", max_degree, "truncation degree (default g+N+5)");
  auto* pf_cmd = app.add_subcommand("pf", "pseudo-Frobenius numbers, Betti route and definition");
  gens_arg(pf_cmd);
  auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius number, Betti route and definition");
  gens_arg(frob_cmd);
  auto* indisp_cmd = app.add_subcommand("indisp", "strong indispensability report");
  gens_arg(indisp_cmd);
  auto* scan_cmd = app.add_subcommand("scan", "batch classification and indispensability");
  scan_cmd->add_option("--gens-max", scan.gens_max, "all generator sets with entries up to M");
  scan_cmd->add_option("--dim", scan.dims, "embedding dimensions for --gens-max (default 2 3 4)");
  scan_cmd->add_option("--class", scan.class_filter, "keep only this class");
  scan_cmd->add_option("--komeda", scan.komeda_max, "all Komeda parameters up to P");
  scan_cmd->add_option("--bresinsky", scan.bresinsky_max, "all Bresinsky parameters up to P");
  scan_cmd->add_option("--format", scan.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads (default: hardware)");
  auto* self_cmd = app.add_subcommand("selftest", "check the worked examples");

  std::vector<std::string> argv_store{"semires"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (*self_cmd) return print_selftest(out);
    if (*scan_cmd) {
      if (scan.dims.empty()) scan.dims = {2, 3, 4};
      return run_scan(scan, out, err);
    }

    const auto s = semigroup_arg(gens);
    if (*classify_cmd) {
      const auto c = classify(s);
      emit(out, to_json(c));
      return c.tag == ClassTag::Unsupported ? Unsupported : Ok;
    }
    const auto c = classify(s);
    if (*resolve_cmd) {
      const auto r = resolve(c);
      if (format == "text")
        out << render_text(r);
      else
        emit(out, to_json(r));
      return Ok;
    }
    if (*hilbert_cmd) {
      const auto r = resolve(c);
      const Int D = max_degree >= 0 ? max_degree : default_hilbert_degree(s);
      const auto h = hilbert_series(r, D);
      emit(out, Json{{"k_polynomial", to_json(k_polynomial(r))},
                     {"max_degree", D},
                     {"series", h.series},
                     {"passed", h.passed},
                     {"mismatches", h.mismatches}});
      return h.passed ? Ok : Verification;
    }
    if (*pf_cmd || *frob_cmd) {
      const auto r = resolve(c);
      const auto betti = pf_from_betti(r);
      const auto def = s.pseudofrobenius();
      Json j;
      bool match = true;
      if (*pf_cmd) {
        j = Json{{"betti_route", betti}, {"definition_route", def}};
        match = betti == def;
        if (c.tag == ClassTag::ThreeGenNonSymmetric || c.tag == ClassTag::FourGenSymmetricNonCI ||
            c.tag == ClassTag::FourGenPseudosymmetric) {
          const auto closed = closed_form_pf(c);
          j["closed_form"] = closed;
          match = match && closed == def;
        }
      } else {
        j = Json{{"betti_route", betti.back()}, {"definition_route", s.frobenius()}};
        match = betti.back() == s.frobenius();
      }
      j["generators"] = to_json(s);
      j["match"] = match;
      emit(out, j);
      if (!match) err << "Betti route and definition disagree\n";
      return match ? Ok : Verification;
    }
    if (*indisp_cmd) {
      auto j = to_json(strong_indisp(c));
      j["class"] = to_string(c.tag);
      j["generators"] = to_json(s);
      emit(out, j);
      return Ok;
    }
  } catch (const UnsupportedClass& e) {
    err << "unsupported: " << e.what() << "\n";
    return Unsupported;
  } catch (const UnsupportedEmbeddingDimension& e) {
    err << "unsupported: " << e.what() << "\n";
    return Unsupported;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return Verification;
  } catch (const ConsistencyFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return Verification;
  } catch (const CrossValidationMismatch& e) {
    err << "verification failed: " << e.what() << "\n";
    return Verification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

}  // namespace semires::cli
