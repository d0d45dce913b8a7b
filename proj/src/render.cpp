#include "eqorbit/render.hpp"

#include <iomanip>
#include <sstream>

namespace eqorbit {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "latex") return Format::Latex;
  throw UsageError("unknown format '" + s + "' (expected text|json|csv|latex)");
}

namespace {

struct Shown {
  std::string p_label, P_label;
  SparsePoly p, P;
  Factored factored;
};

Shown shown(const OrbitClassResult& r, const RenderOptions& opt) {
  Shown s;
  if (r.flipped && opt.flip_sign) {
    s.p = flip_sign(r.affine_p);
    s.P = flip_sign(r.projective_P);
    s.p_label = "p";
    s.P_label = "P";
    s.factored = primitive_split(s.p);
  } else {
    s.p = r.affine_p;
    s.P = r.projective_P;
    s.p_label = r.flipped ? "p(-u,-v)" : "p";
    s.P_label = r.flipped ? "P(-u,-v)" : "P";
    s.factored = r.factored;
  }
  return s;
}

std::string aut_text(const OrbitClassResult& r) {
  if (r.aut_infinite) return "infinity";
  if (r.aut_order) return std::to_string(*r.aut_order);
  return "-";
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

std::string latex_escape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '!' && i + 1 < s.size() && s[i + 1] == '=') {
      out += "$\\neq$";
      ++i;
      continue;
    }
    if (c == '&' || c == '%' || c == '#' || c == '_') out += '\\';
    out += c;
  }
  return out;
}

bool show_affine(const RenderOptions& o) { return o.view != View::Projective; }
bool show_projective(const RenderOptions& o) { return o.view != View::Affine; }

std::string section_text(const OrbitClassResult& r) {
  if (!r.section_count) return "";
  std::string s = r.section_count->get_str();
  if (r.aut_order && *r.aut_order > 1) {
    Rational q = *r.section_count / Rational(*r.aut_order);
    if (is_integer(q)) s += " = " + std::to_string(*r.aut_order) + "*" + q.get_str();
  }
  return s;
}

}  // namespace

nlohmann::json result_to_json(const OrbitClassResult& r, const RenderOptions& opt) {
  Shown s = shown(r, opt);
  nlohmann::json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["d"] = r.d;
  j["rank"] = r.rank;
  j["convention"] = s.p_label;
  if (show_affine(opt)) {
    j["p"] = s.p.to_json();
    j["p_text"] = s.p.to_string();
    j["p_factored"] = s.factored.to_string();
  }
  if (show_projective(opt)) {
    j["P"] = s.P.to_json();
    j["P_text"] = s.P.to_string();
  }
  j["predegree"] = r.predegree.get_str();
  if (r.aut_infinite)
    j["aut"] = "infinity";
  else if (r.aut_order)
    j["aut"] = *r.aut_order;
  else
    j["aut"] = nullptr;
  j["aut_infinite"] = r.aut_infinite;
  j["provenance"] = r.provenance;
  j["notes"] = r.notes;
  if (r.section_count) j["section_count"] = r.section_count->get_str();
  return j;
}

std::string render_class(const OrbitClassResult& r, const RenderOptions& opt) {
  Shown s = shown(r, opt);
  std::ostringstream out;
  switch (opt.format) {
    case Format::Json:
      out << result_to_json(r, opt).dump(2) << "\n";
      break;
    case Format::Csv:
      return render_table("class", {r}, opt);
    case Format::Latex:
      out << "% " << r.id << ": " << r.name << "\n";
      if (show_affine(opt)) out << "\\[ " << (s.p_label == "p" ? "p_C" : "p_X(-u,-v)") << " = " << s.factored.to_latex() << " \\]\n";
      if (show_projective(opt)) out << "\\[ " << (s.P_label == "P" ? "P_C" : "P_X(-u,-v)") << " = " << s.P.to_latex() << " \\]\n";
      out << "% predegree = " << r.predegree.get_str() << ", #Aut = " << aut_text(r) << "\n";
      break;
    case Format::Text: {
      out << r.id << ": " << r.name << "\n";
      if (show_affine(opt)) {
        std::string fac = s.factored.to_string(), exp = s.p.to_string();
        out << s.p_label << " = " << fac << "\n";
        if (fac != exp) out << s.p_label << " expanded = " << exp << "\n";
      }
      if (show_projective(opt)) out << s.P_label << " = " << s.P.to_string() << "\n";
      out << "predegree = " << r.predegree.get_str() << "\n";
      out << "aut = " << aut_text(r) << "\n";
      if (r.section_count) out << "plane sections = " << section_text(r) << "\n";
      out << "provenance: " << r.provenance << "\n";
      for (const auto& n : r.notes) out << "note: " << n << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_table(const std::string& which, const std::vector<OrbitClassResult>& rows,
                         const RenderOptions& opt, const std::vector<std::string>& footnotes) {
  const bool sections = which == "sections";
  std::ostringstream out;
  switch (opt.format) {
    case Format::Json: {
      nlohmann::json j;
      j["table"] = which;
      j["rows"] = nlohmann::json::array();
      for (const auto& r : rows) j["rows"].push_back(result_to_json(r, opt));
      if (!footnotes.empty()) j["footnotes"] = footnotes;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "id,name,p,P,predegree,aut,section_count,provenance\n";
      for (const auto& r : rows) {
        Shown s = shown(r, opt);
        out << csv_field(r.id) << "," << csv_field(r.name) << ","
            << csv_field(show_affine(opt) ? s.p.to_string() : "") << ","
            << csv_field(show_projective(opt) ? s.P.to_string() : "") << "," << r.predegree.get_str()
            << "," << aut_text(r) << "," << (r.section_count ? r.section_count->get_str() : "") << ","
            << csv_field(r.provenance) << "\n";
      }
      break;
    }
    case Format::Latex: {
      if (sections) {
        out << "\\begin{tabular}{l|r}\n"
            << "Curve $C$ & $\\#\\operatorname{Aut}(C)\\cdot\\#$ planar sections\\\\\\hline\n";
        for (const auto& r : rows)
          out << latex_escape(r.name) << " & $" << section_text(r) << "$\\\\\n";
      } else {
        out << "\\begin{tabular}{l|l|l}\n"
            << "Curve $C$ & $p_C(c_1,c_2,c_3)$ & $\\#\\operatorname{Aut}$\\\\\\hline\n";
        for (const auto& r : rows) {
          Shown s = shown(r, opt);
          std::string a = r.aut_infinite ? "$\\infty$" : (r.aut_order ? std::to_string(*r.aut_order) : "");
          out << latex_escape(r.name) << " & $" << s.factored.to_latex() << "$ & " << a << "\\\\\n";
        }
      }
      out << "\\end{tabular}\n";
      for (const auto& f : footnotes) out << "% " << f << "\n";
      break;
    }
    case Format::Text: {
      std::size_t w = 4;
      for (const auto& r : rows) w = std::max(w, r.id.size());
      for (const auto& r : rows) {
        Shown s = shown(r, opt);
        out << std::left << std::setw(static_cast<int>(w) + 2) << r.id;
        if (sections) {
          out << section_text(r);
        } else {
          if (show_affine(opt)) out << s.p_label << " = " << s.factored.to_string();
          if (show_projective(opt)) out << (show_affine(opt) ? "  |  " : "") << s.P_label << " = " << s.P.to_string();
          out << "  [predegree " << r.predegree.get_str() << ", aut " << aut_text(r) << "]";
        }
        out << "\n";
      }
      for (const auto& f : footnotes) out << "# " << f << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace eqorbit
