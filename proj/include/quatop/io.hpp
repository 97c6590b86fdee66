#ifndef QUATOP_IO_HPP
#define QUATOP_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "quatop/spectrum.hpp"
#include "quatop/wvnb.hpp"

namespace quatop::io {

using json = nlohmann::ordered_json;

// Quaternions serialize as 4-arrays [w, x, y, z] everywhere.
json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

// {"n": int, "entries": [[[w,x,y,z], ...], ...]} row-major; ragged rows
// and non-4-tuples are rejected.
json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

// {"n": int, "axis": [x,y,z], "entries": [[[alpha,beta], ...], ...]}
json slice_matrix_to_json(const SliceMatrix& m);
SliceMatrix slice_matrix_from_json(const json& j);

// {"axis": [x,y,z], "spheres": [{"alpha","beta","mult","residual"}, ...]}
json spectrum_to_json(const SpectrumReport& rep);

json curve_to_json(const Curve& c);
Curve curve_from_json(const json& j);

// {"epsilon", "mode", "U", "d", "K", "norms", "axis", "levels"[, "curve"]}
json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const json& j);

// {"diag": {"kind", ...}, "band": optional}
OpDescriptor descriptor_from_json(const json& j);

QMatrix load_qmatrix(const std::string& path);
json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace quatop::io

#endif  // QUATOP_IO_HPP
