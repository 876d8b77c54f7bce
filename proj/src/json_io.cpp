#include "hhweyl/json_io.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "hhweyl/errors.hpp"

namespace hhweyl {

namespace {

using njson = nlohmann::ordered_json;

njson parse_document(const std::string& text, const char* what_for) {
  try {
    return njson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string(what_for) + ": " + e.what(), e.byte);
  }
}

[[noreturn]] void bad_input(const std::string& message) {
  throw Error(Error::Kind::Input, "json-io", message);
}

njson partition_to_json(const Partition& p) {
  njson arr = njson::array();
  for (unsigned part : p.parts) arr.push_back(part);
  return arr;
}

njson matrix_to_json(const ExactMatrix& m) {
  njson rows = njson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    njson row = njson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string signed_sum(const char* tag, const std::map<Partition, Rational>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) out << rational_str(a) << "*";
    out << tag << "[";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) out << ",";
      out << p.parts[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace

GroupInput parse_group_input(const std::string& json_text) {
  njson doc = parse_document(json_text, "group input");
  if (!doc.is_object()) bad_input("group input must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    bad_input("group input needs an unsigned \"dim\"");
  GroupInput in;
  in.dim = doc["dim"].get<std::size_t>();
  if (in.dim == 0 || in.dim > 64) bad_input("\"dim\" must be between 1 and 64");
  if (!doc.contains("generators") || !doc["generators"].is_array() ||
      doc["generators"].empty())
    bad_input("group input needs a nonempty \"generators\" array");
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_array() || gen.size() != in.dim)
      bad_input("each generator must be a " + std::to_string(in.dim) + "-row matrix");
    ExactMatrix m(in.dim, in.dim);
    for (std::size_t i = 0; i < in.dim; ++i) {
      const auto& row = gen[i];
      if (!row.is_array() || row.size() != in.dim)
        bad_input("generator rows must hold " + std::to_string(in.dim) + " entries");
      for (std::size_t j = 0; j < in.dim; ++j) {
        if (!row[j].is_string()) bad_input("matrix entries must be literal strings");
        m.at(i, j) = parse_cyclotomic(row[j].get<std::string>());
      }
    }
    in.generators.push_back(std::move(m));
  }
  if (doc.contains("cap")) {
    if (!doc["cap"].is_number_unsigned() || doc["cap"].get<std::uint64_t>() == 0)
      bad_input("\"cap\" must be a positive integer");
    in.cap = doc["cap"].get<std::size_t>();
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "dim" && key != "generators" && key != "cap")
      bad_input("unknown group input key \"" + key + "\"");
  }
  return in;
}

std::string group_input_to_json(const GroupInput& in) {
  njson doc;
  doc["dim"] = in.dim;
  njson gens = njson::array();
  for (const ExactMatrix& g : in.generators) gens.push_back(matrix_to_json(g));
  doc["generators"] = std::move(gens);
  doc["cap"] = in.cap;
  return doc.dump();
}

CharacterTable parse_character_table(const std::string& json_text) {
  njson doc = parse_document(json_text, "character table");
  if (!doc.is_object()) bad_input("character table must be a JSON object");
  CharacterTable t;
  if (!doc.contains("classes") || !doc["classes"].is_array() || doc["classes"].empty())
    bad_input("character table needs a nonempty \"classes\" array");
  for (const auto& cls : doc["classes"]) {
    if (!cls.is_object()) bad_input("each class must be an object");
    CharClass c;
    if (cls.contains("label")) {
      if (!cls["label"].is_string()) bad_input("class label must be a string");
      c.label = cls["label"].get<std::string>();
    }
    if (!cls.contains("size") || !cls["size"].is_number_unsigned())
      bad_input("class needs an unsigned \"size\"");
    c.size = cls["size"].get<std::uint64_t>();
    if (!cls.contains("order") || !cls["order"].is_number_unsigned())
      bad_input("class needs an unsigned \"order\"");
    c.order = cls["order"].get<std::uint32_t>();
    t.classes.push_back(std::move(c));
  }
  if (!doc.contains("power_maps") || !doc["power_maps"].is_array())
    bad_input("character table needs \"power_maps\"");
  for (const auto& pm : doc["power_maps"]) {
    if (!pm.is_array()) bad_input("each power map must be an array of class indices");
    std::vector<std::uint32_t> row;
    for (const auto& e : pm) {
      if (!e.is_number_unsigned()) bad_input("power map entries must be class indices");
      row.push_back(e.get<std::uint32_t>());
    }
    t.power_maps.push_back(std::move(row));
  }
  if (!doc.contains("chi") || !doc["chi"].is_array())
    bad_input("character table needs \"chi\"");
  for (const auto& v : doc["chi"]) {
    if (!v.is_string()) bad_input("chi entries must be literal strings");
    t.chi.push_back(parse_cyclotomic(v.get<std::string>()));
  }
  if (doc.contains("doubled")) {
    if (!doc["doubled"].is_boolean()) bad_input("\"doubled\" must be a boolean");
    t.doubled = doc["doubled"].get<bool>();
  }
  t.validate();
  return t;
}

std::string character_table_to_json(const CharacterTable& t) {
  njson doc;
  njson classes = njson::array();
  for (const CharClass& c : t.classes) {
    njson cls;
    cls["label"] = c.label;
    cls["size"] = c.size;
    cls["order"] = c.order;
    classes.push_back(std::move(cls));
  }
  doc["classes"] = std::move(classes);
  doc["power_maps"] = t.power_maps;
  njson chi = njson::array();
  for (const Cyclotomic& v : t.chi) chi.push_back(v.str());
  doc["chi"] = std::move(chi);
  doc["doubled"] = t.doubled;
  return doc.dump();
}

namespace {

njson ring_report_doc(const GradedCenterRing& ring) {
  njson doc;
  doc["betti"] = ring.betti;
  njson basis = njson::array();
  for (const GradedBasisElement& b : ring.basis) {
    njson e;
    e["class"] = b.class_index;
    e["degree"] = b.degree;
    e["size"] = b.size;
    e["label"] = b.label;
    basis.push_back(std::move(e));
  }
  doc["basis"] = std::move(basis);
  njson table = njson::array();
  for (std::size_t i = 1; i < ring.basis.size(); ++i) {
    for (std::size_t j = i; j < ring.basis.size(); ++j) {
      njson row;
      row["i"] = i;
      row["j"] = j;
      njson terms = njson::array();
      for (const auto& [k, coeff] : ring.table[i][j]) {
        njson term;
        term["k"] = k;
        term["coeff"] = coeff;
        terms.push_back(std::move(term));
      }
      row["terms"] = std::move(terms);
      table.push_back(std::move(row));
    }
  }
  doc["table"] = std::move(table);
  return doc;
}

// Text emitters return their content without a trailing newline; whoever
// prints them appends one.
std::string chomp(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string betti_line(const GradedCenterRing& ring) {
  std::ostringstream out;
  out << "betti [";
  for (std::size_t k = 0; k < ring.betti.size(); ++k) {
    if (k) out << ",";
    out << ring.betti[k];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string ring_report_json(const GradedCenterRing& ring) {
  return ring_report_doc(ring).dump();
}

std::string ring_report_text(const GradedCenterRing& ring) {
  return betti_line(ring) + "\n" + chomp(render_mult_table(ring));
}

std::string betti_json(const GradedCenterRing& ring) {
  njson doc;
  doc["betti"] = ring.betti;
  return doc.dump();
}

std::string betti_text(const GradedCenterRing& ring) { return betti_line(ring); }

std::string group_report_json(const FiniteMatrixGroup& g, const ClassData& cd,
                              bool symplectic, const GradedCenterRing& ring) {
  njson doc;
  doc["order"] = g.order();
  doc["dim"] = g.dim;
  doc["ambient_conductor"] = g.ambient;
  doc["symplectic"] = symplectic;
  doc["num_classes"] = cd.classes.size();
  bool perm = all_permutation_matrices(g);
  njson classes = njson::array();
  for (std::uint32_t c = 0; c < cd.classes.size(); ++c) {
    njson e;
    e["label"] = class_display_label(g, cd, c, perm);
    e["size"] = cd.classes[c].size();
    e["order"] = cd.classes[c].order;
    e["d"] = cd.classes[c].d;
    classes.push_back(std::move(e));
  }
  doc["classes"] = std::move(classes);
  doc["betti"] = ring.betti;
  return doc.dump();
}

std::string group_report_text(const FiniteMatrixGroup& g, const ClassData& cd,
                              bool symplectic, const GradedCenterRing& ring) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  out << "matrix size " << g.dim << "\n";
  out << "ambient conductor " << g.ambient << "\n";
  out << "symplectic " << (symplectic ? "yes" : "no") << "\n";
  out << "classes " << cd.classes.size() << "\n";
  bool perm = all_permutation_matrices(g);
  for (std::uint32_t c = 0; c < cd.classes.size(); ++c) {
    const ConjClass& cls = cd.classes[c];
    out << "  class " << c << ": d=" << cls.d << " size=" << cls.size()
        << " order=" << cls.order << " label=" << class_display_label(g, cd, c, perm)
        << "\n";
  }
  out << betti_line(ring) << "\n";
  return chomp(out.str());
}

std::string chartab_d_json(const CharacterTable& t, const std::vector<unsigned>& d) {
  njson doc;
  njson labels = njson::array();
  for (const CharClass& c : t.classes) labels.push_back(c.label);
  doc["classes"] = std::move(labels);
  doc["doubled"] = t.doubled;
  doc["degree"] = t.degree();
  doc["d"] = d;
  return doc.dump();
}

std::string chartab_d_text(const CharacterTable& t, const std::vector<unsigned>& d) {
  std::size_t width = 5;
  for (const CharClass& c : t.classes) width = std::max(width, c.label.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "class" << "d\n";
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    out << std::left << std::setw(static_cast<int>(width) + 2) << t.classes[c].label
        << d[c] << "\n";
  return chomp(out.str());
}

namespace {

njson fh_terms_json(const std::map<Partition, std::uint64_t>& terms) {
  njson arr = njson::array();
  for (const auto& [nu, a] : terms) {
    njson term;
    term["nu"] = partition_to_json(nu);
    term["a"] = a;
    arr.push_back(std::move(term));
  }
  return arr;
}

std::string fh_terms_table(const std::map<Partition, std::uint64_t>& terms) {
  std::size_t width = 4;
  for (const auto& [nu, a] : terms) width = std::max(width, nu.str().size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "nu" << "a\n";
  for (const auto& [nu, a] : terms)
    out << std::left << std::setw(static_cast<int>(width) + 2) << nu.str() << a << "\n";
  return out.str();
}

}  // namespace

std::string fh_constants_json(const FHConstants& f) {
  njson doc;
  doc["lam"] = partition_to_json(f.lam);
  doc["mu"] = partition_to_json(f.mu);
  doc["n"] = f.n;
  doc["terms"] = fh_terms_json(f.terms);
  return doc.dump();
}

std::string fh_constants_text(const FHConstants& f) {
  std::ostringstream out;
  out << "lam " << f.lam.str() << "  mu " << f.mu.str() << "  n " << f.n << "\n";
  out << fh_terms_table(f.terms);
  return chomp(out.str());
}

std::string fh_top_json(const Partition& lam, const Partition& mu,
                        const std::map<Partition, std::uint64_t>& terms) {
  njson doc;
  doc["lam"] = partition_to_json(lam);
  doc["mu"] = partition_to_json(mu);
  doc["terms"] = fh_terms_json(terms);
  return doc.dump();
}

std::string fh_top_text(const Partition& lam, const Partition& mu,
                        const std::map<Partition, std::uint64_t>& terms) {
  std::ostringstream out;
  out << "lam " << lam.str() << "  mu " << mu.str() << "  (stable top degree)\n";
  out << fh_terms_table(terms);
  return chomp(out.str());
}

std::string fh_poly_json(const Partition& lam, const Partition& mu, const Partition& nu,
                         unsigned n_lo, unsigned n_hi, const IntegerValuedPolynomial& p) {
  njson doc;
  doc["lam"] = partition_to_json(lam);
  doc["mu"] = partition_to_json(mu);
  doc["nu"] = partition_to_json(nu);
  doc["n_lo"] = n_lo;
  doc["n_hi"] = n_hi;
  njson coeffs = njson::array();
  for (const BigInt& c : p.coeffs) coeffs.push_back(c.get_str());
  doc["coeffs"] = std::move(coeffs);
  doc["display"] = p.str();
  return doc.dump();
}

std::string fh_poly_text(const Partition& lam, const Partition& mu, const Partition& nu,
                         unsigned n_lo, unsigned n_hi, const IntegerValuedPolynomial& p) {
  std::ostringstream out;
  out << "a(" << lam.str() << "," << mu.str() << ";" << nu.str() << ")(n) = " << p.str()
      << "  fitted on n in [" << n_lo << "," << n_hi << "]\n";
  return chomp(out.str());
}

std::string symfunc_json(const SymFunc& f) {
  njson doc;
  doc["basis"] = f.basis == SymFunc::Basis::H ? "h" : "m";
  njson terms = njson::array();
  for (const auto& [p, c] : f.terms) {
    njson term;
    term["partition"] = partition_to_json(p);
    term["coeff"] = rational_str(c);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string g_product_json(const Partition& lam, const Partition& mu,
                           const std::map<Partition, Rational>& terms) {
  njson doc;
  doc["basis"] = "g";
  doc["lam"] = partition_to_json(lam);
  doc["mu"] = partition_to_json(mu);
  njson arr = njson::array();
  for (const auto& [p, c] : terms) {
    njson term;
    term["partition"] = partition_to_json(p);
    term["coeff"] = rational_str(c);
    arr.push_back(std::move(term));
  }
  doc["terms"] = std::move(arr);
  return doc.dump();
}

std::string g_product_text(const Partition& lam, const Partition& mu,
                           const std::map<Partition, Rational>& terms) {
  std::ostringstream out;
  out << signed_sum("g", {{lam, Rational(1)}}) << " * " << signed_sum("g", {{mu, Rational(1)}})
      << " = " << signed_sum("g", terms) << "\n";
  return chomp(out.str());
}

std::string macdonald_json(const MacdonaldReport& r) {
  njson doc;
  doc["lam"] = partition_to_json(r.lam);
  doc["mu"] = partition_to_json(r.mu);
  njson gside = njson::array();
  for (const auto& [p, c] : r.g_side) {
    njson term;
    term["partition"] = partition_to_json(p);
    term["coeff"] = rational_str(c);
    gside.push_back(std::move(term));
  }
  doc["g_side"] = std::move(gside);
  doc["class_side"] = fh_terms_json(r.class_side);
  doc["integral"] = r.integral;
  doc["reconstructs"] = r.reconstructs;
  doc["matches"] = r.matches;
  doc["ok"] = r.ok();
  return doc.dump();
}

std::string macdonald_text(const MacdonaldReport& r) {
  std::ostringstream out;
  out << "lam " << r.lam.str() << "  mu " << r.mu.str() << "\n";
  out << "g-side     " << signed_sum("g", r.g_side) << "\n";
  std::map<Partition, Rational> class_terms;
  for (const auto& [nu, a] : r.class_side)
    class_terms.emplace(nu, Rational(static_cast<unsigned long>(a)));
  out << "class-side " << signed_sum("c", class_terms) << "\n";
  out << "match " << (r.ok() ? "yes" : "NO") << "\n";
  return chomp(out.str());
}

}  // namespace hhweyl
