// hhweyl: exact computations around graded centers of group algebras of
// finite symplectic matrix groups, stable class-sum products of symmetric
// groups, and their realization inside the ring of symmetric functions.
//
// Exit codes: 0 success, 1 a mathematical consistency check failed,
// 2 malformed input or bad command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hhweyl/builtin.hpp"
#include "hhweyl/center.hpp"
#include "hhweyl/chartab.hpp"
#include "hhweyl/cyclotomic.hpp"
#include "hhweyl/errors.hpp"
#include "hhweyl/fhring.hpp"
#include "hhweyl/group.hpp"
#include "hhweyl/json_io.hpp"
#include "hhweyl/symfunc.hpp"

namespace fs = std::filesystem;
using namespace hhweyl;
using njson = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::Input, "cli", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw Error(Error::Kind::Input, "cli", "cannot write " + path);
}

// ---------------------------------------------------------------------------
// Result cache for the group pipeline. Keys are the canonical re-emitted
// input plus every flag that changes the computation; the full key is stored
// inside the cached document and verified on read, so a hash collision can
// only ever cause a recompute. All writes go through a temp file and rename.

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

fs::path cache_root() {
  if (const char* env = std::getenv("HHWEYL_CACHE_DIR")) return fs::path(env);
  if (const char* home = std::getenv("HOME"))
    return fs::path(home) / ".cache" / "hhweyl";
  return fs::path(".hhweyl-cache");
}

fs::path cache_file_for(const std::string& key) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return cache_root() / (std::string(hex) + ".json");
}

std::optional<njson> cache_load(const std::string& key) {
  try {
    fs::path file = cache_file_for(key);
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    njson doc = njson::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (!doc.contains("key") || doc["key"] != key) return std::nullopt;
    return doc;
  } catch (...) {
    return std::nullopt;
  }
}

void cache_store(const std::string& key, const njson& doc) {
  try {
    fs::path file = cache_file_for(key);
    fs::create_directories(file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << doc.dump();
      if (!out) {
        std::error_code ec;
        fs::remove(tmp, ec);
        return;
      }
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  } catch (...) {
    // the cache is best-effort; a failed write never fails the command
  }
}

// ---------------------------------------------------------------------------
// Group pipeline shared by group-report, betti and multtable.

struct GroupOptions {
  std::string path;
  bool doubled = false;
  bool allow_non_symplectic = false;
  bool no_cache = false;
  std::size_t cap = 0;  // 0 keeps the value from the input file
  std::string format = "text";
};

void add_group_options(CLI::App* sub, GroupOptions& o) {
  sub->add_option("--group", o.path, "group input JSON file")->required();
  sub->add_flag("--double", o.doubled,
                "extend each generator g to blockdiag(g, (g^-1)^T) before closure");
  sub->add_flag("--allow-non-symplectic", o.allow_non_symplectic,
                "admit generators that do not preserve the standard form");
  sub->add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");
  sub->add_option("--cap", o.cap, "override the closure size bound");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

// Runs closure -> classes -> structure constants -> graded ring with all
// consistency checks on, then renders every projection once so all three
// group commands can share a single cache entry.
njson group_documents(const GroupOptions& opt) {
  GroupInput input = parse_group_input(read_file(opt.path));
  if (opt.cap) input.cap = opt.cap;

  std::string key = std::string("pipeline-v1|double=") + (opt.doubled ? "1" : "0") +
                    "|allow=" + (opt.allow_non_symplectic ? "1" : "0") + "|" +
                    group_input_to_json(input);
  if (!opt.no_cache)
    if (auto hit = cache_load(key)) return *hit;

  std::vector<ExactMatrix> gens =
      opt.doubled ? double_representation(input.generators) : input.generators;
  FiniteMatrixGroup g = close_group(gens, input.cap);
  SymplecticReport sym = verify_symplectic(g);
  if (!sym.ok && !opt.allow_non_symplectic)
    throw NotSymplectic("generator " + std::to_string(sym.offending_generator + 1) +
                        " does not preserve the standard form"
                        " (rerun with --allow-non-symplectic to proceed anyway)");

  ClassData cd = conjugacy_classes(g, sym.ok);
  CenterTable ct = center_structure_constants(g, cd);
  GradedCenterRing ring = graded_center_ring(g, cd, ct);
  require_crosschecks(ring, g, cd, sym.ok);

  njson doc;
  doc["key"] = key;
  doc["group_report_json"] = group_report_json(g, cd, sym.ok, ring);
  doc["group_report_text"] = group_report_text(g, cd, sym.ok, ring);
  doc["ring_report_json"] = ring_report_json(ring);
  doc["ring_report_text"] = ring_report_text(ring);
  doc["betti_json"] = betti_json(ring);
  doc["betti_text"] = betti_text(ring);
  if (!opt.no_cache) cache_store(key, doc);
  return doc;
}

int emit_projection(const GroupOptions& opt, const char* stem) {
  njson doc = group_documents(opt);
  std::cout << doc[std::string(stem) + "_" + opt.format].get<std::string>() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// chartab-d: filtration degrees from character data alone.

struct ChartabOptions {
  std::string table_path;
  std::string group_path;
  bool doubled = false;      // double generators before closure
  bool as_doubled = false;   // read traces as the character of V + V*
  bool allow_odd = false;
  std::string emit_path;
  std::string format = "text";
};

int run_chartab_d(const ChartabOptions& opt) {
  if (opt.table_path.empty() == opt.group_path.empty())
    throw Error(Error::Kind::Input, "cli",
                "chartab-d needs exactly one of --table or --group");

  CharacterTable t;
  std::vector<unsigned> matrix_route;
  if (!opt.table_path.empty()) {
    t = parse_character_table(read_file(opt.table_path));
  } else {
    GroupInput input = parse_group_input(read_file(opt.group_path));
    std::vector<ExactMatrix> gens =
        opt.doubled ? double_representation(input.generators) : input.generators;
    FiniteMatrixGroup g = close_group(gens, input.cap);
    ClassData cd = conjugacy_classes(g, /*require_even_d=*/false);
    t = character_from_group(g, cd, opt.as_doubled);
    matrix_route.reserve(cd.classes.size());
    for (const auto& c : cd.classes)
      matrix_route.push_back(opt.as_doubled ? 2 * c.d : c.d);
  }

  std::vector<unsigned> d = d_from_character_all(t, !opt.allow_odd);

  if (!matrix_route.empty() && d != matrix_route) {
    std::size_t c = 0;
    while (d[c] == matrix_route[c]) ++c;
    throw RouteMismatch("class " + t.classes[c].label + ": character route gives " +
                        std::to_string(d[c]) + ", fixed-space route gives " +
                        std::to_string(matrix_route[c]));
  }

  if (!opt.emit_path.empty()) write_file(opt.emit_path, character_table_to_json(t) + "\n");
  std::cout << (opt.format == "json" ? chartab_d_json(t, d) : chartab_d_text(t, d))
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// Macdonald check: the dual-basis product against stable class-sum constants.

njson partition_array(const Partition& p) {
  njson arr = njson::array();
  for (unsigned part : p.parts) arr.push_back(part);
  return arr;
}

int run_macdonald(const std::string& lam_s, const std::string& mu_s, bool all,
                  unsigned bound, const std::string& format) {
  if (!all) {
    MacdonaldReport r = macdonald_check(parse_partition(lam_s), parse_partition(mu_s), bound);
    std::cout << (format == "json" ? macdonald_json(r) : macdonald_text(r)) << "\n";
    return r.ok() ? 0 : 1;
  }

  std::vector<Partition> pool;
  for (unsigned w = 0; w <= bound; ++w)
    for (const auto& p : partitions_of(w)) pool.push_back(p);

  bool any_fail = false;
  njson rows = njson::array();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].weight() + pool[j].weight() > bound) continue;
      MacdonaldReport r = macdonald_check(pool[i], pool[j], bound);
      if (format == "json") {
        njson row;
        row["lam"] = partition_array(pool[i]);
        row["mu"] = partition_array(pool[j]);
        row["ok"] = r.ok();
        rows.push_back(std::move(row));
      } else {
        std::cout << (r.ok() ? "ok   " : "FAIL ") << pool[i].str() << " x "
                  << pool[j].str() << "\n";
      }
      if (!r.ok()) {
        any_fail = true;
        std::cerr << macdonald_text(r) << "\n";
      }
    }
  }
  if (format == "json") {
    njson doc;
    doc["bound"] = bound;
    doc["pairs"] = std::move(rows);
    doc["ok"] = !any_fail;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << (any_fail ? "macdonald sweep FAILED" : "macdonald sweep passed")
              << "\n";
  }
  return any_fail ? 1 : 0;
}

// ---------------------------------------------------------------------------
// selftest: the invariant suite, runnable on any install without test data.

using Sparse = std::map<std::uint32_t, std::uint64_t>;

Sparse times_basis(const GradedCenterRing& ring, const Sparse& a, std::size_t j) {
  Sparse out;
  for (const auto& [i, c] : a)
    for (const auto& [k, n] : ring.table[i][j]) out[k] += c * n;
  return out;
}

bool table_commutative_associative(const GradedCenterRing& ring) {
  std::size_t m = ring.basis.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (ring.table[i][j] != ring.table[j][i]) return false;
      for (std::size_t k = 0; k < m; ++k) {
        Sparse ij;
        for (const auto& [p, c] : ring.table[i][j]) ij[p] = c;
        Sparse jk;
        for (const auto& [p, c] : ring.table[j][k]) jk[p] = c;
        Sparse left = times_basis(ring, ij, k);
        Sparse right;
        for (const auto& [p, c] : jk)
          for (const auto& [q, n] : ring.table[i][p]) right[q] += c * n;
        if (left != right) return false;
      }
    }
  return true;
}

struct CorpusEntry {
  std::string name;
  std::vector<ExactMatrix> gens;
  std::size_t order;
  std::vector<std::size_t> betti;
};

std::vector<CorpusEntry> selftest_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"minus identity in SL2", {minus_identity(2)}, 2, {1, 0, 1}});
  for (unsigned m = 3; m <= 12; ++m) {
    std::vector<std::size_t> betti = {1, 0, m - 1};
    out.push_back({"cyclic order " + std::to_string(m), cyclic_sl2_generators(m), m,
                   std::move(betti)});
  }
  out.push_back({"quaternion group", quaternion_generators(), 8, {1, 0, 4}});
  out.push_back({"S3 doubled", double_representation(s3_reflection_generators()), 6,
                 {1, 0, 1, 0, 1}});
  out.push_back({"S4 doubled", double_representation(sn_permutation_generators(4)), 24,
                 {1, 0, 1, 0, 2, 0, 1, 0, 0}});
  return out;
}

struct PipelineRun {
  FiniteMatrixGroup g;
  ClassData cd;
  GradedCenterRing ring;
};

PipelineRun run_pipeline(const std::vector<ExactMatrix>& gens) {
  PipelineRun r{close_group(gens, kDefaultClosureCap), {}, {}};
  r.cd = conjugacy_classes(r.g);
  CenterTable ct = center_structure_constants(r.g, r.cd);
  r.ring = graded_center_ring(r.g, r.cd, ct);
  return r;
}

class SelfTest {
public:
  template <class Body>
  void run(const std::string& name, Body&& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    results_.push_back({name, ok, detail});
  }

  int report(const std::string& format) const {
    std::size_t failed = 0;
    for (const auto& r : results_)
      if (!r.ok) ++failed;
    if (format == "json") {
      njson doc;
      njson checks = njson::array();
      for (const auto& r : results_) {
        njson row;
        row["name"] = r.name;
        row["ok"] = r.ok;
        if (!r.ok) row["detail"] = r.detail;
        checks.push_back(std::move(row));
      }
      doc["checks"] = std::move(checks);
      doc["ok"] = failed == 0;
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& r : results_) {
        if (r.ok)
          std::cout << "ok   " << r.name << "\n";
        else
          std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                    << "\n";
      }
      if (failed == 0)
        std::cout << "selftest: all " << results_.size() << " checks passed\n";
      else
        std::cout << "selftest: " << failed << " of " << results_.size()
                  << " checks FAILED\n";
    }
    return failed == 0 ? 0 : 1;
  }

private:
  struct Result {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Result> results_;
};

int run_selftest(const std::string& format) {
  SelfTest st;

  st.run("exact arithmetic in cyclotomic fields", [](std::string& detail) {
    Cyclotomic r = parse_cyclotomic("E(8)-E(8)^3");  // sqrt(2)
    if (!(r * r == parse_cyclotomic("2"))) {
      detail = "square of E(8)-E(8)^3 is not 2";
      return false;
    }
    Cyclotomic i4 = parse_cyclotomic("E(4)");
    if (!(i4 * i4 == parse_cyclotomic("-1"))) {
      detail = "E(4)^2 is not -1";
      return false;
    }
    return true;
  });

  std::vector<std::pair<CorpusEntry, PipelineRun>> runs;
  for (auto& entry : selftest_corpus()) {
    PipelineRun r = run_pipeline(entry.gens);
    runs.emplace_back(std::move(entry), std::move(r));
  }

  st.run("closure orders over the builtin corpus", [&](std::string& detail) {
    for (const auto& [entry, r] : runs)
      if (r.g.order() != entry.order) {
        detail = entry.name + ": order " + std::to_string(r.g.order()) +
                 ", expected " + std::to_string(entry.order);
        return false;
      }
    return true;
  });

  st.run("filtration degrees subadditive (exhaustive)", [&](std::string& detail) {
    for (const auto& [entry, r] : runs) {
      FiltrationReport rep = filtration_check(r.g, r.cd);
      if (!rep.passed || !rep.exhaustive) {
        detail = entry.name;
        return false;
      }
    }
    return true;
  });

  st.run("graded dimensions match expectations", [&](std::string& detail) {
    for (const auto& [entry, r] : runs) {
      require_crosschecks(r.ring, r.g, r.cd);
      if (r.ring.betti != entry.betti) {
        detail = entry.name;
        return false;
      }
    }
    return true;
  });

  st.run("graded products commute and associate", [&](std::string& detail) {
    for (const auto& [entry, r] : runs)
      if (!table_commutative_associative(r.ring)) {
        detail = entry.name;
        return false;
      }
    return true;
  });

  st.run("character route reproduces fixed-space degrees", [&](std::string& detail) {
    for (const auto& [entry, r] : runs) {
      CharacterTable t = character_from_group(r.g, r.cd);
      std::vector<unsigned> d = d_from_character_all(t);
      for (std::size_t c = 0; c < r.cd.classes.size(); ++c)
        if (d[c] != r.cd.classes[c].d) {
          detail = entry.name + ", class " + std::to_string(c);
          return false;
        }
    }
    return true;
  });

  st.run("transposition products in symmetric groups", [](std::string& detail) {
    for (unsigned n = 2; n <= 6; ++n) {
      FHConstants f = fh_constants(Partition({1}), Partition({1}), n);
      std::map<Partition, std::uint64_t> expect;
      expect[Partition(std::vector<unsigned>{})] = static_cast<std::uint64_t>(n) * (n - 1) / 2;
      if (n >= 3) expect[Partition({2})] = 3;
      if (n >= 4) expect[Partition({1, 1})] = 2;
      if (f.terms != expect) {
        detail = "n = " + std::to_string(n);
        return false;
      }
    }
    std::map<Partition, std::uint64_t> top = top_constants(Partition({1}), Partition({1}));
    if (top != std::map<Partition, std::uint64_t>{{Partition({2}), 3},
                                                  {Partition({1, 1}), 2}}) {
      detail = "stable part of the square of the transposition class";
      return false;
    }
    return true;
  });

  st.run("inverse series coefficients and duality", [](std::string& detail) {
    if (!same_function(hstar(1), scale(SymFunc::h(Partition({1})), Rational(-1)))) {
      detail = "degree 1";
      return false;
    }
    SymFunc expect2 = add(scale(SymFunc::h(Partition({1, 1})), Rational(2)),
                          scale(SymFunc::h(Partition({2})), Rational(-1)));
    if (!same_function(hstar(2), expect2)) {
      detail = "degree 2";
      return false;
    }
    for (unsigned w = 0; w <= 6; ++w)
      for (const auto& lam : partitions_of(w)) {
        SymFunc h = SymFunc::h(lam);
        if (!same_function(psi(psi(h)), h)) {
          detail = "involution fails at " + lam.str();
          return false;
        }
      }
    for (unsigned w = 1; w <= 4; ++w)
      for (const auto& lam : partitions_of(w))
        for (const auto& mu : partitions_of(w)) {
          Rational got = hall_pairing(g_basis(lam), hstar_product(mu));
          if (got != (lam == mu ? Rational(1) : Rational(0))) {
            detail = "pairing of " + lam.str() + " against " + mu.str();
            return false;
          }
        }
    return true;
  });

  st.run("dual-basis products match stable class-sum constants", [](std::string& detail) {
    std::vector<Partition> pool;
    for (unsigned w = 0; w <= 5; ++w)
      for (const auto& p : partitions_of(w)) pool.push_back(p);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        if (pool[i].weight() + pool[j].weight() > 5) continue;
        if (!macdonald_check(pool[i], pool[j]).ok()) {
          detail = pool[i].str() + " x " + pool[j].str();
          return false;
        }
      }
    for (const auto& [a, b] :
         {std::pair{Partition({2, 1}), Partition({2, 1})},
          std::pair{Partition({1, 1, 1}), Partition({1, 1, 1})}}) {
      if (!macdonald_check(a, b).ok()) {
        detail = a.str() + " x " + b.str();
        return false;
      }
    }
    return true;
  });

  return st.report(format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact graded centers of group algebras of finite symplectic matrix\n"
      "groups, stable class-sum products of symmetric groups, and their\n"
      "realization in the ring of symmetric functions."};
  app.require_subcommand(1);

  GroupOptions report_opts, betti_opts, mult_opts;
  auto* c_report = app.add_subcommand(
      "group-report", "closure, classes, degrees and graded dimensions of a matrix group");
  add_group_options(c_report, report_opts);
  auto* c_betti = app.add_subcommand(
      "betti", "graded dimension vector of the graded center");
  add_group_options(c_betti, betti_opts);
  auto* c_mult = app.add_subcommand(
      "multtable", "multiplication table of the graded center");
  add_group_options(c_mult, mult_opts);

  ChartabOptions ct_opts;
  auto* c_chartab = app.add_subcommand(
      "chartab-d", "filtration degrees recovered from character data alone");
  c_chartab->add_option("--table", ct_opts.table_path, "character table JSON file");
  c_chartab->add_option("--group", ct_opts.group_path,
                        "group input JSON file (the table is derived from traces)");
  c_chartab->add_flag("--double", ct_opts.doubled,
                      "extend generators to V + V* before closure");
  c_chartab->add_flag("--as-doubled", ct_opts.as_doubled,
                      "treat the traces as a character of V + V*");
  c_chartab->add_flag("--allow-odd", ct_opts.allow_odd,
                      "permit odd filtration degrees");
  c_chartab->add_option("--emit", ct_opts.emit_path,
                        "also write the derived character table to this file");
  c_chartab->add_option("--format", ct_opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string fh_lam, fh_mu;
  unsigned fh_n = 0, fh_bound = kDefaultFhBound;
  std::string fh_format = "text";
  auto* c_fh = app.add_subcommand(
      "fh-constants", "class-sum structure constants of one symmetric group");
  c_fh->add_option("--lam", fh_lam, "first stable type, e.g. 2,1 or ()")->required();
  c_fh->add_option("--mu", fh_mu, "second stable type")->required();
  c_fh->add_option("--n", fh_n, "number of letters")->required();
  c_fh->add_option("--bound", fh_bound, "largest n the brute force will accept");
  c_fh->add_option("--format", fh_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string top_lam, top_mu, top_format = "text";
  auto* c_top = app.add_subcommand(
      "fh-top", "stable top-degree part of a class-sum product");
  c_top->add_option("--lam", top_lam, "first stable type")->required();
  c_top->add_option("--mu", top_mu, "second stable type")->required();
  c_top->add_option("--format", top_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string poly_lam, poly_mu, poly_nu, poly_format = "text";
  unsigned poly_lo = 0, poly_hi = 0;
  auto* c_poly = app.add_subcommand(
      "fh-poly", "one structure constant as a polynomial in n, fitted exactly");
  c_poly->add_option("--lam", poly_lam, "first stable type")->required();
  c_poly->add_option("--mu", poly_mu, "second stable type")->required();
  c_poly->add_option("--nu", poly_nu, "target stable type")->required();
  c_poly->add_option("--n-lo", poly_lo, "first sample point")->required();
  c_poly->add_option("--n-hi", poly_hi, "last sample point")->required();
  c_poly->add_option("--format", poly_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string gp_lam, gp_mu, gp_format = "text";
  unsigned gp_cap = kDefaultWeightCap;
  auto* c_gprod = app.add_subcommand(
      "symf-gprod", "product of two dual-basis symmetric functions, in that basis");
  c_gprod->add_option("--lam", gp_lam, "first partition")->required();
  c_gprod->add_option("--mu", gp_mu, "second partition")->required();
  c_gprod->add_option("--cap", gp_cap, "weight cap for the ambient ring");
  c_gprod->add_option("--format", gp_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string mc_lam, mc_mu, mc_format = "text";
  bool mc_all = false;
  unsigned mc_bound = kDefaultMacdonaldBound;
  auto* c_mac = app.add_subcommand(
      "macdonald-check",
      "compare dual-basis products against stable class-sum constants");
  c_mac->add_option("--lam", mc_lam, "first partition");
  c_mac->add_option("--mu", mc_mu, "second partition");
  c_mac->add_flag("--all", mc_all, "sweep every pair within the weight bound");
  c_mac->add_option("--bound", mc_bound, "combined weight bound");
  c_mac->add_option("--format", mc_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string self_format = "text";
  auto* c_self = app.add_subcommand("selftest", "run the built-in invariant suite");
  c_self->add_option("--format", self_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_report->parsed()) return emit_projection(report_opts, "group_report");
    if (c_betti->parsed()) return emit_projection(betti_opts, "betti");
    if (c_mult->parsed()) return emit_projection(mult_opts, "ring_report");
    if (c_chartab->parsed()) return run_chartab_d(ct_opts);
    if (c_fh->parsed()) {
      FHConstants f =
          fh_constants(parse_partition(fh_lam), parse_partition(fh_mu), fh_n, fh_bound);
      std::cout << (fh_format == "json" ? fh_constants_json(f) : fh_constants_text(f))
                << "\n";
      return 0;
    }
    if (c_top->parsed()) {
      Partition lam = parse_partition(top_lam), mu = parse_partition(top_mu);
      auto terms = top_constants(lam, mu);
      std::cout << (top_format == "json" ? fh_top_json(lam, mu, terms)
                                         : fh_top_text(lam, mu, terms))
                << "\n";
      return 0;
    }
    if (c_poly->parsed()) {
      Partition lam = parse_partition(poly_lam), mu = parse_partition(poly_mu),
                nu = parse_partition(poly_nu);
      IntegerValuedPolynomial p = interpolate_constant(lam, mu, nu, poly_lo, poly_hi);
      std::cout << (poly_format == "json"
                        ? fh_poly_json(lam, mu, nu, poly_lo, poly_hi, p)
                        : fh_poly_text(lam, mu, nu, poly_lo, poly_hi, p))
                << "\n";
      return 0;
    }
    if (c_gprod->parsed()) {
      Partition lam = parse_partition(gp_lam), mu = parse_partition(gp_mu);
      if (lam.weight() + mu.weight() > gp_cap)
        throw Error(Error::Kind::Input, "cli",
                    "combined weight " + std::to_string(lam.weight() + mu.weight()) +
                        " exceeds the cap " + std::to_string(gp_cap) +
                        "; raise --cap");
      auto terms = expand_in_g(multiply(g_basis(lam, gp_cap), g_basis(mu, gp_cap)));
      std::cout << (gp_format == "json" ? g_product_json(lam, mu, terms)
                                        : g_product_text(lam, mu, terms))
                << "\n";
      return 0;
    }
    if (c_mac->parsed()) {
      std::size_t named = c_mac->count("--lam") + c_mac->count("--mu");
      if (mc_all ? named != 0 : named != 2)
        throw Error(Error::Kind::Input, "cli",
                    "macdonald-check needs either --lam and --mu, or --all");
      return run_macdonald(mc_lam, mc_mu, mc_all, mc_bound, mc_format);
    }
    if (c_self->parsed()) return run_selftest(self_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::Input ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
