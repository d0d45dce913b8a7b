#pragma once

#include <string>
#include <vector>

#include "eqorbit/orbit_classes.hpp"

namespace eqorbit {

enum class Format { Text, Json, Csv, Latex };
enum class View { Both, Affine, Projective };

struct RenderOptions {
  Format format = Format::Text;
  View view = View::Both;
  bool flip_sign = false;  // points rows: show p_X(u,v) instead of p_X(-u,-v)
};

Format parse_format(const std::string& s);

nlohmann::json result_to_json(const OrbitClassResult& r, const RenderOptions& opt);
std::string render_class(const OrbitClassResult& r, const RenderOptions& opt);
/// which: quartics | cubics | sections
std::string render_table(const std::string& which, const std::vector<OrbitClassResult>& rows,
                         const RenderOptions& opt, const std::vector<std::string>& footnotes = {});

}  // namespace eqorbit
