#pragma once

#include "photon/field.hpp"
#include "photon/spin.hpp"
#include "photon/tensor.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

namespace photon {

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw std::invalid_argument(std::string("missing field \"") + name + '"');
  }
  return *it;
}

inline Vec3 vec3_from_json(const nlohmann::json& j, const char* name) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw std::invalid_argument(std::string(name) + " must be an array of three numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline nlohmann::json to_json(const Vec3& v) {
  return nlohmann::json::array({v.x(), v.y(), v.z()});
}

// Complex triples serialize as [[re, im], [re, im], [re, im]].
inline nlohmann::json to_json(const CVec3& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int c = 0; c < 3; ++c) {
    out.push_back(nlohmann::json::array({v[c].real(), v[c].imag()}));
  }
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const AntisymTensor& f) {
  return {{"e", detail::to_json(f.e)}, {"b", detail::to_json(f.b)}};
}

inline AntisymTensor antisym_from_json(const nlohmann::json& j) {
  return {detail::vec3_from_json(detail::require_field(j, "e"), "e"),
          detail::vec3_from_json(detail::require_field(j, "b"), "b")};
}

inline nlohmann::json to_json(const PhotonTensor& p) {
  nlohmann::json j = to_json(p.tensor());
  j["k"] = detail::to_json(p.k());
  j["helicity"] = p.helicity();
  j["omega"] = p.omega();
  return j;
}

inline PhotonTensor photon_tensor_from_json(const nlohmann::json& j,
                                            double tolerance = tol::transformed) {
  const AntisymTensor f = antisym_from_json(j);
  const Vec3 k = detail::vec3_from_json(detail::require_field(j, "k"), "k");
  const auto& h = detail::require_field(j, "helicity");
  if (!h.is_number_integer()) throw std::invalid_argument("helicity must be an integer");
  const PhotonTensor p = PhotonTensor::validated(f, k, h.get<int>(), tolerance);
  if (j.contains("omega")) {
    const auto& w = j.at("omega");
    if (!w.is_number()) throw std::invalid_argument("omega must be a number");
    if (std::abs(w.get<double>() - p.omega()) > tolerance * std::max(1.0, p.omega())) {
      throw std::invalid_argument("omega is inconsistent with |e|");
    }
  }
  return p;
}

inline nlohmann::json to_json(const HelicityBasis& basis) {
  return {{"k", detail::to_json(basis.k)},
          {"chi_plus", detail::to_json(basis.chi_plus)},
          {"chi_minus", detail::to_json(basis.chi_minus)},
          {"chi_zero", detail::to_json(basis.chi_zero)}};
}

// State files: little-endian binary, magic + grid + representation tag +
// row-major interleaved component triples, each as (re, im) doubles.
inline constexpr char kStateMagic[8] = {'P', 'H', 'S', 'T', 'A', 'T', 'E', '1'};

inline void write_state(const std::filesystem::path& path, const SpinorField& psi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open state file for writing: " + path.string());
  out.write(kStateMagic, sizeof(kStateMagic));
  const auto n = static_cast<std::uint32_t>(psi.grid().n());
  const double p_max = psi.grid().p_max();
  const std::uint8_t rep = psi.representation() == Representation::momentum ? 0 : 1;
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&p_max), sizeof(p_max));
  out.write(reinterpret_cast<const char*>(&rep), sizeof(rep));
  const std::size_t size = psi.grid().size();
  std::vector<double> row(6);
  for (std::size_t idx = 0; idx < size; ++idx) {
    const CVec3 v = psi.value(idx);
    for (int c = 0; c < 3; ++c) {
      row[2 * c] = v[c].real();
      row[2 * c + 1] = v[c].imag();
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  if (!out) throw std::runtime_error("failed writing state file: " + path.string());
}

inline SpinorField read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open state file: " + path.string());
  char magic[sizeof(kStateMagic)];
  in.read(magic, sizeof(magic));
  if (!in || !std::equal(std::begin(magic), std::end(magic), std::begin(kStateMagic))) {
    throw std::invalid_argument("not a photon state file: " + path.string());
  }
  std::uint32_t n = 0;
  double p_max = 0.0;
  std::uint8_t rep = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&p_max), sizeof(p_max));
  in.read(reinterpret_cast<char*>(&rep), sizeof(rep));
  if (!in || rep > 1) throw std::invalid_argument("corrupt state file header: " + path.string());
  const MomentumGrid grid(static_cast<int>(n), p_max);
  SpinorField psi(grid,
                  rep == 0 ? Representation::momentum : Representation::position);
  const std::size_t size = grid.size();
  std::vector<double> row(6);
  for (std::size_t idx = 0; idx < size; ++idx) {
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(double)));
    if (!in) throw std::invalid_argument("truncated state file: " + path.string());
    psi.set_value(idx, CVec3(Complex(row[0], row[1]), Complex(row[2], row[3]),
                             Complex(row[4], row[5])));
  }
  return psi;
}

}  // namespace photon
