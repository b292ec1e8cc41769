#include "qdiv/cli_core.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace qdiv::cli {

namespace {

Json int_json(const Int& v) {
  // Desk-scale values fit in 64 bits; anything larger is serialized exactly
  // as a string.
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json triple_json(const Triple& c) {
  return Json::array({to_string(c.c1), to_string(c.c2), to_string(c.c3)});
}

std::string triple_arg(const Triple& c) {
  return to_string(c.c1) + "," + to_string(c.c2) + "," + to_string(c.c3);
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + s +
                              "' (expected json, csv or text)");
}

SquareFreeInt RunConfig::checked_z() const {
  auto sf = SquareFreeInt::try_make(z);
  if (!sf)
    throw std::invalid_argument("z = " + z.str() +
                                " is not square-free (or is 0 or 1)");
  return *sf;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (rec.is_discarded() || !rec.contains("key") || !rec.contains("result"))
      continue;
    entries_[rec["key"].get<std::string>()] = rec["result"].get<std::string>();
  }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::append(const std::string& op, const std::string& key,
                         const std::string& result_json) {
  entries_[key] = result_json;
  nlohmann::ordered_json rec;
  rec["op"] = op;
  rec["key"] = key;
  rec["result"] = result_json;
  rec["version"] = kVersion;
  std::ofstream out(path_, std::ios::app);
  out << rec.dump() << "\n";
}

std::string cache_key(const std::string& op, const std::string& args) {
  return std::string("qdiv/") + kVersion + "|" + op + "|" + args;
}

std::string run_cached(ResultCache* cache, const std::string& op,
                       const std::string& key,
                       const std::function<Json()>& compute) {
  if (cache) {
    if (auto hit = cache->lookup(key)) return *hit;
  }
  std::string text = compute().dump(2);
  if (cache) cache->append(op, key, text);
  return text;
}

Json fields_json(const SquareFreeInt& z, std::size_t limit) {
  Json j;
  j["op"] = "fields";
  j["z"] = int_json(z.value());
  j["limit"] = limit;
  Json rows = Json::array();
  auto stream = gen_S(z);
  for (const Int& s : stream.take(limit)) {
    Triple c{Rational(0), Rational(s), Rational(0)};
    AlgebraSpec spec{QuadField(z), c};
    Json row;
    row["z"] = int_json(z.value());
    row["rule"] = "S";
    row["value"] = int_json(s);
    row["triple"] = triple_json(c);
    row["class"] = to_string(classify_triple(spec));
    row["nucleus_dim"] = right_nucleus_basis(spec).size();
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json skewfields_json(const SquareFreeInt& z, std::size_t limit, bool reduce) {
  Json j;
  j["op"] = "skewfields";
  j["z"] = int_json(z.value());
  j["limit"] = limit;
  const bool gaussian = z.value() == -1;
  j["reduced"] = gaussian ? false : reduce;
  std::vector<Int> values;
  std::string rule, label;
  if (gaussian) {
    values = gen_T_gaussian().take(limit);
    rule = "T";
    label = "transversal";
  } else {
    values = gen_skew_candidates(z).take(limit);
    if (reduce) values = reduce_redundant(z, values);
    rule = "skew_candidates";
    label = "candidate";
  }
  Json rows = Json::array();
  for (const Int& t : values) {
    Triple c{Rational(1), Rational(0), Rational(t)};
    Json row;
    row["z"] = int_json(z.value());
    row["rule"] = rule;
    row["value"] = int_json(t);
    row["triple"] = triple_json(c);
    row["label"] = label;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json is_division_json(const SquareFreeInt& z, const Triple& c,
                      std::int64_t bound) {
  Json j;
  j["op"] = "is-division";
  j["z"] = int_json(z.value());
  j["c"] = triple_json(c);
  Json verdict = decide_admissible(z, c, bound).to_json();
  for (auto& [k, val] : verdict.items()) j[k] = val;
  return j;
}

Json iso_json(const SquareFreeInt& z, const Triple& c, const Triple& d) {
  Json j;
  j["op"] = "iso";
  j["z"] = int_json(z.value());
  j["c"] = triple_json(c);
  j["d"] = triple_json(d);
  Json verdict = are_isomorphic(QuadField(z), c, d).to_json();
  for (auto& [k, val] : verdict.items()) j[k] = val;
  return j;
}

Json nucleus_json(const SquareFreeInt& z, const Triple& c) {
  Json j;
  j["op"] = "nucleus";
  j["z"] = int_json(z.value());
  j["c"] = triple_json(c);
  AlgebraSpec spec{QuadField(z), c};
  auto basis = right_nucleus_basis(spec);
  j["dimension"] = basis.size();
  Json vecs = Json::array(), elems = Json::array();
  for (const auto& n : basis) {
    Json v = Json::array();
    for (const auto& coord : coords(n)) v.push_back(to_string(coord));
    vecs.push_back(v);
    elems.push_back(n.to_string());
  }
  j["basis"] = vecs;
  j["elements"] = elems;
  return j;
}

Json family_json(const SquareFreeInt& z, const std::string& family,
                 std::size_t limit) {
  std::vector<FamilyPoint> points;
  if (family == "ptilde") {
    points = gen_Ptilde(z, default_r_samples(z), limit);
  } else if (family == "p1" || family == "p2" || family == "f") {
    if (z.value() != -1)
      throw std::invalid_argument("family '" + family +
                                  "' is defined for z = -1 only");
    if (family == "p1") {
      for (const Rational& q : default_q_samples(limit))
        points.push_back(p1_point(q));
    } else if (family == "p2") {
      for (const Int& n : default_p2_samples(limit))
        points.push_back(p2_point(n));
    } else {
      points = gen_F_gaussian(limit);
    }
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected ptilde, p1, p2 or f)");
  }
  Json j;
  j["op"] = "family";
  j["z"] = int_json(z.value());
  j["family"] = family;
  j["limit"] = limit;
  Json rows = Json::array();
  for (const auto& pt : points) {
    Json row;
    row["z"] = int_json(z.value());
    row["rule"] = pt.family;
    Json params;
    for (const auto& [name, value] : pt.params) params[name] = to_string(value);
    row["params"] = params;
    row["triple"] = triple_json(pt.c);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json norm_test_json(const SquareFreeInt& z, const SquareFreeInt& w) {
  Json j;
  j["op"] = "norm-test";
  j["z"] = int_json(z.value());
  j["w"] = int_json(w.value());
  bool member = in_norm_group(z, w);
  j["in_norm_group"] = member;
  Json rep = nullptr;
  if (member) {
    if (auto r = norm_representation_search(z, w, 200))
      rep = Json::array({to_string(r->first), to_string(r->second)});
  }
  j["representation"] = rep;
  return j;
}

Json structure_json(const SquareFreeInt& z, const Triple& c) {
  Json j;
  j["op"] = "structure";
  j["z"] = int_json(z.value());
  j["c"] = triple_json(c);
  j["basis"] = Json::array({"e1=(1,0)", "e2=(sqrt(z),0)", "e3=(0,1)",
                            "e4=(0,sqrt(z))"});
  j["tensor"] = structure_constants_json(AlgebraSpec{QuadField(z), c});
  return j;
}

namespace {

struct AuditCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

Json audit_check_json(const AuditCheck& c) {
  Json j;
  j["name"] = c.name;
  j["checked"] = c.checked;
  j["failures"] = c.failures;
  return j;
}

}  // namespace

Json audit_json(std::int64_t z_max, std::int64_t w_max, std::int64_t bound) {
  std::vector<AuditCheck> checks;
  auto zs = SquareFreeStream("Z", [](const Int&) { return true; })
                .take_abs_le(z_max);
  auto ws = SquareFreeStream("Z", [](const Int&) { return true; })
                .take_abs_le(w_max);

  {
    AuditCheck search_vs{"norm_search_vs_criterion"};
    AuditCheck legendre_vs{"norm_criterion_vs_legendre"};
    for (const Int& zi : zs) {
      SquareFreeInt z(zi);
      for (const Int& wi : ws) {
        SquareFreeInt w(wi);
        bool member = in_norm_group(z, w);
        ++search_vs.checked;
        if (!member && norm_representation_search(z, w, bound))
          search_vs.failures.push_back("(z=" + zi.str() + ", w=" + wi.str() +
                                       "): search found a representation");
        ++legendre_vs.checked;
        if (member != in_norm_group_via_ternary(z, w))
          legendre_vs.failures.push_back("(z=" + zi.str() + ", w=" + wi.str() +
                                         "): Legendre route disagrees");
      }
    }
    checks.push_back(search_vs);
    checks.push_back(legendre_vs);
  }

  {
    AuditCheck transversal{"s_transversal"};
    for (const Int& zi : zs) {
      if (boost::multiprecision::abs(zi) > 10) continue;
      SquareFreeInt z(zi);
      QuadField l(z);
      auto members = gen_S(z).take(10);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t k = i + 1; k < members.size(); ++k) {
          ++transversal.checked;
          if (square_class_in_ell(Rational(members[i]) / Rational(members[k]),
                                  l) != SquareClass::NonSquare)
            transversal.failures.push_back(
                "(z=" + zi.str() + "): members " + members[i].str() + ", " +
                members[k].str() + " are equivalent");
        }
      auto covering = gen_S(z).take_abs_le(30);
      auto all = SquareFreeStream("Z", [](const Int&) { return true; })
                     .take_abs_le(30);
      for (const Int& wv : all) {
        Rational w(wv);
        ++transversal.checked;
        if (square_class_in_ell(w, l) != SquareClass::NonSquare) continue;
        bool covered = false;
        for (const Int& m : covering)
          if (square_class_in_ell(w / Rational(m), l) !=
              SquareClass::NonSquare) {
            covered = true;
            break;
          }
        if (!covered)
          transversal.failures.push_back("(z=" + zi.str() + ", w=" + wv.str() +
                                         "): no equivalent member emitted");
      }
    }
    checks.push_back(transversal);
  }

  {
    AuditCheck families{"family_soundness"};
    std::vector<std::pair<Int, Triple>> points;
    for (Int zi : {Int(-1), Int(2)}) {
      SquareFreeInt z(zi);
      for (const auto& pt : gen_Ptilde(z, default_r_samples(z), 6))
        points.emplace_back(zi, pt.c);
    }
    for (const Rational& q : default_q_samples(4))
      points.emplace_back(Int(-1), p1_point(q).c);
    for (const Int& n : default_p2_samples(4))
      points.emplace_back(Int(-1), p2_point(n).c);
    for (const auto& [zi, c] : points) {
      SquareFreeInt z(zi);
      ++families.checked;
      auto verdict = decide_admissible(z, c, bound);
      AlgebraSpec spec{QuadField(z), c};
      std::string id = "(z=" + zi.str() + ", c=" + c.to_string() + ")";
      if (!verdict.admissible_proven())
        families.failures.push_back(id + ": no admissibility certificate");
      else if (search_nontrivial_solution(system_of(z, c), bound))
        families.failures.push_back(id + ": search found a zero divisor");
      else if (classify_triple(spec) != TripleClass::NonAssocN)
        families.failures.push_back(id + ": not classified NonAssocN");
      else if (right_nucleus_basis(spec).size() != 2)
        families.failures.push_back(id + ": nucleus dimension != 2");
    }
    checks.push_back(families);
  }

  Json j;
  j["op"] = "audit";
  j["z_max"] = z_max;
  j["w_max"] = w_max;
  j["bound"] = bound;
  Json arr = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.failures.empty();
    arr.push_back(audit_check_json(c));
  }
  j["checks"] = arr;
  j["ok"] = ok;
  return j;
}

int exit_code_for(const std::string& op, const Json& payload) {
  if (op == "is-division")
    return payload.at("status").get<std::string>() == "not_admissible" ? 1 : 0;
  if (op == "iso") return payload.at("isomorphic").get<bool>() ? 0 : 1;
  if (op == "norm-test")
    return payload.at("in_norm_group").get<bool>() ? 0 : 1;
  if (op == "audit") return payload.at("ok").get<bool>() ? 0 : 1;
  return 0;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(cells[i]);
  }
  return out;
}

std::string json_scalar(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string params_cell(const Json& params) {
  std::string out;
  for (auto& [k, v] : params.items()) {
    if (!out.empty()) out += ";";
    out += k + "=" + json_scalar(v);
  }
  return out;
}

std::string witness_cell(const Json& w) {
  if (w.is_null()) return "";
  std::string out;
  for (const auto& v : w) {
    if (!out.empty()) out += " ";
    out += v.dump();
  }
  return out;
}

std::string render_csv(const std::string& op, const Json& p) {
  std::ostringstream out;
  auto triple_cells = [&](const Json& t) {
    return std::vector<std::string>{t[0].get<std::string>(),
                                    t[1].get<std::string>(),
                                    t[2].get<std::string>()};
  };
  if (op == "fields" || op == "skewfields" || op == "family") {
    if (op == "fields")
      out << "z,rule,value,c1,c2,c3,class,nucleus_dim\n";
    else if (op == "skewfields")
      out << "z,rule,value,c1,c2,c3,label\n";
    else
      out << "z,rule,params,c1,c2,c3\n";
    for (const auto& row : p.at("rows")) {
      std::vector<std::string> cells{json_scalar(row.at("z")),
                                     row.at("rule").get<std::string>()};
      if (op == "family")
        cells.push_back(params_cell(row.at("params")));
      else
        cells.push_back(json_scalar(row.at("value")));
      for (auto& c : triple_cells(row.at("triple"))) cells.push_back(c);
      if (op == "fields") {
        cells.push_back(row.at("class").get<std::string>());
        cells.push_back(json_scalar(row.at("nucleus_dim")));
      } else if (op == "skewfields") {
        cells.push_back(row.at("label").get<std::string>());
      }
      out << join_row(cells) << "\n";
    }
    return out.str();
  }
  if (op == "is-division") {
    out << "z,c1,c2,c3,status,certificate,witness,bound\n";
    auto cells = std::vector<std::string>{json_scalar(p.at("z"))};
    for (auto& c : triple_cells(p.at("c"))) cells.push_back(c);
    cells.push_back(p.at("status").get<std::string>());
    cells.push_back(json_scalar(p.at("certificate")));
    cells.push_back(witness_cell(p.at("witness")));
    cells.push_back(json_scalar(p.at("bound")));
    out << join_row(cells) << "\n";
    return out.str();
  }
  if (op == "iso") {
    out << "z,c1,c2,c3,d1,d2,d3,isomorphic,witness\n";
    auto cells = std::vector<std::string>{json_scalar(p.at("z"))};
    for (auto& c : triple_cells(p.at("c"))) cells.push_back(c);
    for (auto& c : triple_cells(p.at("d"))) cells.push_back(c);
    cells.push_back(p.at("isomorphic").get<bool>() ? "true" : "false");
    cells.push_back(json_scalar(p.at("witness")));
    out << join_row(cells) << "\n";
    return out.str();
  }
  if (op == "nucleus") {
    out << "z,c1,c2,c3,dimension,basis\n";
    auto cells = std::vector<std::string>{json_scalar(p.at("z"))};
    for (auto& c : triple_cells(p.at("c"))) cells.push_back(c);
    cells.push_back(json_scalar(p.at("dimension")));
    std::string basis;
    for (const auto& vec : p.at("basis")) {
      if (!basis.empty()) basis += ";";
      std::string v;
      for (const auto& coord : vec) {
        if (!v.empty()) v += " ";
        v += coord.get<std::string>();
      }
      basis += v;
    }
    cells.push_back(basis);
    out << join_row(cells) << "\n";
    return out.str();
  }
  if (op == "norm-test") {
    out << "z,w,in_norm_group,a,b\n";
    std::vector<std::string> cells{json_scalar(p.at("z")),
                                   json_scalar(p.at("w")),
                                   p.at("in_norm_group").get<bool>() ? "true"
                                                                     : "false"};
    if (p.at("representation").is_null()) {
      cells.push_back("");
      cells.push_back("");
    } else {
      cells.push_back(p.at("representation")[0].get<std::string>());
      cells.push_back(p.at("representation")[1].get<std::string>());
    }
    out << join_row(cells) << "\n";
    return out.str();
  }
  if (op == "structure") {
    out << "i,j,k,coeff\n";
    const auto& tensor = p.at("tensor");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          out << i + 1 << "," << j + 1 << "," << k + 1 << ","
              << csv_escape(tensor[i][j][k].get<std::string>()) << "\n";
    return out.str();
  }
  if (op == "audit") {
    out << "check,checked,failures\n";
    for (const auto& c : p.at("checks")) {
      std::string fails;
      for (const auto& f : c.at("failures")) {
        if (!fails.empty()) fails += ";";
        fails += f.get<std::string>();
      }
      out << join_row({c.at("name").get<std::string>(),
                       json_scalar(c.at("checked")), fails})
          << "\n";
    }
    return out.str();
  }
  throw std::invalid_argument("render_csv: unknown op " + op);
}

std::string triple_text(const Json& t) {
  return "(" + t[0].get<std::string>() + ", " + t[1].get<std::string>() +
         ", " + t[2].get<std::string>() + ")";
}

std::string render_text(const std::string& op, const Json& p) {
  std::ostringstream out;
  if (op == "fields" || op == "skewfields" || op == "family") {
    for (const auto& row : p.at("rows")) {
      out << row.at("rule").get<std::string>();
      if (op == "family")
        out << " " << params_cell(row.at("params"));
      else
        out << " " << json_scalar(row.at("value"));
      out << "  c=" << triple_text(row.at("triple"));
      if (op == "fields")
        out << "  " << row.at("class").get<std::string>() << "  N_r dim "
            << json_scalar(row.at("nucleus_dim"));
      if (op == "skewfields") out << "  [" << row.at("label").get<std::string>() << "]";
      out << "\n";
    }
    return out.str();
  }
  if (op == "is-division") {
    out << "z=" << json_scalar(p.at("z")) << " c=" << triple_text(p.at("c"))
        << ": " << p.at("status").get<std::string>();
    if (!p.at("certificate").is_null())
      out << " by " << p.at("certificate").get<std::string>();
    if (!p.at("witness").is_null())
      out << ", witness (" << witness_cell(p.at("witness")) << ")";
    out << " (bound " << json_scalar(p.at("bound")) << ")\n";
    return out.str();
  }
  if (op == "iso") {
    out << "A(l," << triple_text(p.at("c")) << ") and A(l,"
        << triple_text(p.at("d")) << ") over z=" << json_scalar(p.at("z"))
        << ": "
        << (p.at("isomorphic").get<bool>() ? "isomorphic" : "not isomorphic");
    if (!p.at("witness").is_null())
      out << ", witness x = " << p.at("witness").get<std::string>();
    out << "\n";
    return out.str();
  }
  if (op == "nucleus") {
    out << "right nucleus of A(l," << triple_text(p.at("c"))
        << "), z=" << json_scalar(p.at("z")) << ": dimension "
        << json_scalar(p.at("dimension")) << "\n";
    for (const auto& e : p.at("elements"))
      out << "  " << e.get<std::string>() << "\n";
    return out.str();
  }
  if (op == "norm-test") {
    out << "w=" << json_scalar(p.at("w")) << " over z=" << json_scalar(p.at("z"))
        << ": "
        << (p.at("in_norm_group").get<bool>() ? "in the norm group"
                                              : "not a norm");
    if (!p.at("representation").is_null())
      out << " (w = a^2 - z b^2 with a=" +
                 p.at("representation")[0].get<std::string>() + ", b=" +
                 p.at("representation")[1].get<std::string>() + ")";
    out << "\n";
    return out.str();
  }
  if (op == "structure") {
    const auto& tensor = p.at("tensor");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        out << "e" << i + 1 << " e" << j + 1 << " =";
        bool any = false;
        for (int k = 0; k < 4; ++k) {
          std::string coeff = tensor[i][j][k].get<std::string>();
          if (coeff == "0") continue;
          out << (any ? " + " : " ") << coeff << " e" << k + 1;
          any = true;
        }
        if (!any) out << " 0";
        out << "\n";
      }
    return out.str();
  }
  if (op == "audit") {
    for (const auto& c : p.at("checks")) {
      out << c.at("name").get<std::string>() << ": "
          << json_scalar(c.at("checked")) << " checked, "
          << c.at("failures").size() << " failures\n";
      for (const auto& f : c.at("failures"))
        out << "  FAIL " << f.get<std::string>() << "\n";
    }
    out << (p.at("ok").get<bool>() ? "audit OK" : "audit FAILED") << "\n";
    return out.str();
  }
  throw std::invalid_argument("render_text: unknown op " + op);
}

}  // namespace

std::string render(const std::string& op, const Json& payload, Format format) {
  switch (format) {
    case Format::Json: return payload.dump(2);
    case Format::Csv: return render_csv(op, payload);
    case Format::Text: return render_text(op, payload);
  }
  throw std::logic_error("render: bad format");
}

CmdOutcome run_command(const RunConfig& cfg, const std::string& op,
                       const std::optional<Triple>& c,
                       const std::optional<Triple>& d,
                       const std::optional<Int>& w,
                       std::optional<std::int64_t> z_max,
                       std::optional<std::int64_t> w_max) {
  std::optional<ResultCache> cache;
  if (!cfg.cache_path.empty()) cache.emplace(cfg.cache_path);
  ResultCache* cptr = cache ? &*cache : nullptr;

  std::string args;
  std::function<Json()> compute;

  if (op == "fields") {
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";limit=" + std::to_string(cfg.limit);
    compute = [=] { return fields_json(z, cfg.limit); };
  } else if (op == "skewfields") {
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";limit=" + std::to_string(cfg.limit) +
           ";reduce=" + (cfg.reduce ? "1" : "0");
    compute = [=] { return skewfields_json(z, cfg.limit, cfg.reduce); };
  } else if (op == "is-division") {
    if (!c) throw std::invalid_argument("is-division: missing --c");
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";c=" + triple_arg(*c) +
           ";bound=" + std::to_string(cfg.bound);
    compute = [=] { return is_division_json(z, *c, cfg.bound); };
  } else if (op == "iso") {
    if (!c || !d) throw std::invalid_argument("iso: missing --c or --d");
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";c=" + triple_arg(*c) +
           ";d=" + triple_arg(*d);
    compute = [=] { return iso_json(z, *c, *d); };
  } else if (op == "nucleus") {
    if (!c) throw std::invalid_argument("nucleus: missing --c");
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";c=" + triple_arg(*c);
    compute = [=] { return nucleus_json(z, *c); };
  } else if (op == "family") {
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";family=" + cfg.family +
           ";limit=" + std::to_string(cfg.limit);
    compute = [=] { return family_json(z, cfg.family, cfg.limit); };
  } else if (op == "norm-test") {
    if (!w) throw std::invalid_argument("norm-test: missing --w");
    auto z = cfg.checked_z();
    auto wsf = SquareFreeInt::try_make(*w);
    if (!wsf)
      throw std::invalid_argument("w = " + w->str() +
                                  " is not square-free (or is 0 or 1)");
    args = "z=" + z.value().str() + ";w=" + w->str();
    compute = [=] { return norm_test_json(z, *wsf); };
  } else if (op == "structure") {
    if (!c) throw std::invalid_argument("structure: missing --c");
    auto z = cfg.checked_z();
    args = "z=" + z.value().str() + ";c=" + triple_arg(*c);
    compute = [=] { return structure_json(z, *c); };
  } else if (op == "audit") {
    std::int64_t zm = z_max.value_or(10), wm = w_max.value_or(10);
    args = "zmax=" + std::to_string(zm) + ";wmax=" + std::to_string(wm) +
           ";bound=" + std::to_string(cfg.bound);
    compute = [=, b = cfg.bound] { return audit_json(zm, wm, b); };
  } else {
    throw std::invalid_argument("unknown command '" + op + "'");
  }

  std::string json_text = run_cached(cptr, op, cache_key(op, args), compute);
  Json payload = Json::parse(json_text);
  CmdOutcome out;
  out.exit_code = exit_code_for(op, payload);
  out.json_text = json_text;
  out.output = cfg.format == Format::Json ? json_text
                                          : render(op, payload, cfg.format);
  return out;
}

}  // namespace qdiv::cli
