// Command-line front end for the photon model library.
//
// Exit codes: 0 on success, 2 for input/validation problems (message on
// stderr), 1 for anything unexpected.

#include <photon/photon.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace photon;

Vec3 parse_vec3(const std::string& text, const char* what) {
  std::istringstream in(text);
  Vec3 v;
  char sep1 = 0, sep2 = 0;
  if (!(in >> v.x() >> sep1 >> v.y() >> sep2 >> v.z()) || sep1 != ',' || sep2 != ',' ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument(std::string(what) + " must be three comma-separated numbers");
  }
  return v;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

double json_number(const json& j, const char* name) {
  const json& field = photon::detail::require_field(j, name);
  if (!field.is_number()) {
    throw std::invalid_argument(std::string(name) + " must be a number");
  }
  return field.get<double>();
}

int json_int(const json& j, const char* name) {
  const json& field = photon::detail::require_field(j, name);
  if (!field.is_number_integer()) {
    throw std::invalid_argument(std::string(name) + " must be an integer");
  }
  return field.get<int>();
}

MomentumGrid grid_from_json(const json& j) {
  const json& g = photon::detail::require_field(j, "grid");
  return MomentumGrid(json_int(g, "n"), json_number(g, "p_max"));
}

SpinorField packet_from_json(const MomentumGrid& grid, const json& j) {
  const std::string type = j.contains("type") ? j.at("type").get<std::string>() : "gaussian";
  if (type != "gaussian") {
    throw std::invalid_argument("unknown initial state type \"" + type + '"');
  }
  const Vec3 p0 = photon::detail::vec3_from_json(photon::detail::require_field(j, "p0"), "p0");
  return gaussian_packet(grid, p0, json_number(j, "sigma"), json_int(j, "helicity"));
}

// ---------------------------------------------------------------- tensor ---

struct TensorIo {
  AntisymTensor f;
  std::optional<Vec3> k;
  std::optional<int> helicity;
};

TensorIo tensor_from_file(const std::string& path) {
  const json j = load_json(path);
  TensorIo io{antisym_from_json(j), std::nullopt, std::nullopt};
  if (j.contains("k")) io.k = photon::detail::vec3_from_json(j.at("k"), "k");
  if (j.contains("helicity")) {
    if (!j.at("helicity").is_number_integer()) {
      throw std::invalid_argument("helicity must be an integer");
    }
    io.helicity = j.at("helicity").get<int>();
  }
  return io;
}

json tensor_to_output(const TensorIo& io) {
  json j = to_json(io.f);
  if (io.k) j["k"] = photon::detail::to_json(*io.k);
  if (io.helicity && io.k) {
    // Revalidate the full photon packet and report its frequency.
    const PhotonTensor p = PhotonTensor::validated(io.f, *io.k, *io.helicity, tol::transformed);
    j["helicity"] = p.helicity();
    j["omega"] = p.omega();
  }
  return j;
}

void run_tensor_make(const std::string& k_text, int helicity, double omega, double phase,
                     double time) {
  const PhotonTensor p =
      make_photon_tensor(parse_vec3(k_text, "--k"), helicity, omega, phase, time);
  emit(to_json(p));
}

void run_tensor_boost(const std::string& in, const std::string& beta_text) {
  const LorentzBoost boost(parse_vec3(beta_text, "--beta"));
  TensorIo io = tensor_from_file(in);
  io.f = boost.transform(io.f);
  if (io.k) io.k = boost.aberrate(*io.k);
  emit(tensor_to_output(io));
}

void run_tensor_dual(const std::string& in) {
  TensorIo io = tensor_from_file(in);
  // On a photon packet the dual is a quarter-turn of the polarization plane:
  // direction and helicity tags survive untouched.
  io.f = dual(io.f);
  emit(tensor_to_output(io));
}

void run_tensor_invariants(const std::string& in) {
  const TensorInvariants inv = invariants(tensor_from_file(in).f);
  emit(json{{"trace", inv.trace}, {"ff", inv.ff}, {"ff_dual", inv.ff_dual}});
}

void run_tensor_symmetry(const std::string& in, const std::string& op_text) {
  DiscreteOp op;
  if (op_text == "P") {
    op = DiscreteOp::P;
  } else if (op_text == "T") {
    op = DiscreteOp::T;
  } else if (op_text == "C") {
    op = DiscreteOp::C;
  } else if (op_text == "D") {
    op = DiscreteOp::D;
  } else {
    throw std::invalid_argument("--op must be one of P, T, C, D");
  }
  TensorIo io = tensor_from_file(in);
  io.f = discrete_symmetry(io.f, op);
  // Keep the packet tags consistent: parity and time reversal send k to -k,
  // and parity alone inverts the helicity.
  if (io.k && (op == DiscreteOp::P || op == DiscreteOp::T)) io.k = -*io.k;
  if (io.helicity && op == DiscreteOp::P) io.helicity = -*io.helicity;
  emit(tensor_to_output(io));
}

void run_tensor_transversality(const std::string& in, const std::string& k_text) {
  const TensorIo io = tensor_from_file(in);
  Vec3 k;
  if (!k_text.empty()) {
    k = parse_vec3(k_text, "--k");
  } else if (io.k) {
    k = *io.k;
  } else {
    throw std::invalid_argument("no direction: pass --k or include \"k\" in the file");
  }
  const auto [residual, dual_residual] = transversality_residual(io.f, k);
  emit(json{{"residual", residual}, {"dual_residual", dual_residual}});
}

// -------------------------------------------------------------- helicity ---

void run_helicity(const std::string& k_text) {
  emit(to_json(helicity_basis(parse_vec3(k_text, "--k").normalized())));
}

// ---------------------------------------------------------------- evolve ---

void append_csv_row(std::string& csv, int step, double time, const Observables& obs) {
  char line[256];
  std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", step, time,
                obs.norm, obs.energy, obs.helicity, obs.transversality_defect);
  csv += line;
}

void run_evolve(const std::string& config_path, const std::string& state_path,
                const std::string& out_path, const std::string& save_state_path) {
  const json cfg = load_json(config_path);
  EvolutionConfig ec{};
  ec.dt = json_number(cfg, "dt");
  ec.steps = json_int(cfg, "steps");
  // The march below takes one stride at a time, so enforce the whole-run
  // contract here rather than relying on evolve() seeing the full count.
  if (ec.steps < 1) throw std::invalid_argument("steps must be at least 1");
  ec.project_transverse =
      cfg.contains("project_transverse") && cfg.at("project_transverse").get<bool>();
  const int every = cfg.contains("observables_every") ? json_int(cfg, "observables_every") : 1;
  if (every < 1) throw std::invalid_argument("observables_every must be at least 1");

  SpinorField state = [&] {
    if (!state_path.empty() && cfg.contains("initial")) {
      throw std::invalid_argument("give either --state or an \"initial\" block, not both");
    }
    if (!state_path.empty()) {
      SpinorField loaded = read_state(state_path);
      return loaded.representation() == Representation::momentum ? loaded
                                                                 : to_momentum(loaded);
    }
    if (cfg.contains("initial")) {
      const json& init = cfg.at("initial");
      return packet_from_json(grid_from_json(init), init);
    }
    throw std::invalid_argument("no initial state: pass --state or add an \"initial\" block");
  }();

  // March step by step so observables can be sampled on the way.
  std::string csv = "step,time,norm,energy,helicity,defect\n";
  append_csv_row(csv, 0, 0.0, observables(state));
  const EvolutionConfig stride{ec.dt, 1, ec.project_transverse};
  for (int step = 1; step <= ec.steps; ++step) {
    state = evolve(state, stride);
    if (step % every == 0 || step == ec.steps) {
      append_csv_row(csv, step, step * ec.dt, observables(state));
    }
  }

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << csv;
  }
  if (!save_state_path.empty()) write_state(save_state_path, state);
}

// -------------------------------------------------------------- toymodel ---

void run_toymodel(const std::string& model, double omega0, double ring_k) {
  ToyModelReport report{};
  json params = json::object();
  if (model == "disk") {
    report = toy_model_report(make_disk(omega0));
  } else if (model == "ring") {
    report = toy_model_report(make_ring(omega0, ring_k));
    params["k"] = ring_k;
  } else if (model == "string") {
    report = toy_model_report(make_string(omega0));
  } else {
    throw std::invalid_argument("--model must be disk, ring or string");
  }
  emit(json{{"model", model},
            {"omega0", report.omega0},
            {"params", params},
            {"E", report.energy},
            {"S", report.spin},
            {"sigma_T", report.sigma_t},
            {"rel_err_E", report.rel_err_energy},
            {"rel_err_S", report.rel_err_spin}});
}

// ---------------------------------------------------------- maxwell demo ---

void run_maxwell_demo(const std::string& config_path) {
  const json cfg = load_json(config_path);
  const MomentumGrid grid = grid_from_json(cfg);
  const SpinorField psi =
      packet_from_json(grid, photon::detail::require_field(cfg, "packet"));
  const double dt = json_number(cfg, "dt");
  const int halvings = cfg.contains("halvings") ? json_int(cfg, "halvings") : 1;
  if (halvings < 1 || halvings > 8) {
    throw std::invalid_argument("halvings must be between 1 and 8");
  }
  const SpinorField pos = to_position(psi);
  json runs = json::array();
  std::vector<MaxwellResiduals> residuals;
  double step = dt;
  for (int i = 0; i <= halvings; ++i, step /= 2.0) {
    const MaxwellResiduals r = maxwell_residual(pos, step);
    residuals.push_back(r);
    runs.push_back(json{{"dt", step},
                        {"curl_e", r.curl_e},
                        {"curl_b", r.curl_b},
                        {"div_e", r.div_e},
                        {"div_b", r.div_b}});
  }
  json ratios = json::array();
  for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
    ratios.push_back(json{{"curl_e", residuals[i].curl_e / residuals[i + 1].curl_e},
                          {"curl_b", residuals[i].curl_b / residuals[i + 1].curl_b}});
  }
  emit(json{{"runs", runs},
            {"halving_ratios", ratios},
            {"note", "second-order central differences: each halving divides the curl "
                     "residuals by about four; divergences stay at rounding level"}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-photon model toolkit"};
  app.require_subcommand(1);

  // tensor
  CLI::App* tensor = app.add_subcommand("tensor", "photon tensor algebra");
  tensor->require_subcommand(1);

  std::string make_k{"1,0,0"};
  int make_helicity = 1;
  double make_omega = 1.0, make_phase = 0.0, make_time = 0.0;
  CLI::App* make = tensor->add_subcommand("make", "construct a circular plane-wave tensor");
  make->add_option("--k", make_k, "propagation direction x,y,z")->required();
  make->add_option("--helicity", make_helicity, "+1 or -1")->required();
  make->add_option("--omega", make_omega, "angular frequency")->required();
  make->add_option("--phase", make_phase, "initial field angle");
  make->add_option("--time", make_time, "snapshot time");
  make->callback([&] { run_tensor_make(make_k, make_helicity, make_omega, make_phase, make_time); });

  std::string boost_in, boost_beta;
  CLI::App* boost = tensor->add_subcommand("boost", "Lorentz-boost a tensor file");
  boost->add_option("--in", boost_in, "tensor JSON file")->required();
  boost->add_option("--beta", boost_beta, "boost velocity bx,by,bz")->required();
  boost->callback([&] { run_tensor_boost(boost_in, boost_beta); });

  std::string dual_in;
  CLI::App* dual_cmd = tensor->add_subcommand("dual", "Hodge dual");
  dual_cmd->add_option("--in", dual_in, "tensor JSON file")->required();
  dual_cmd->callback([&] { run_tensor_dual(dual_in); });

  std::string inv_in;
  CLI::App* inv = tensor->add_subcommand("invariants", "scalar invariants");
  inv->add_option("--in", inv_in, "tensor JSON file")->required();
  inv->callback([&] { run_tensor_invariants(inv_in); });

  std::string sym_in, sym_op;
  CLI::App* sym = tensor->add_subcommand("symmetry", "apply P, T, C or D");
  sym->add_option("--in", sym_in, "tensor JSON file")->required();
  sym->add_option("--op", sym_op, "P, T, C or D")->required();
  sym->callback([&] { run_tensor_symmetry(sym_in, sym_op); });

  std::string trans_in, trans_k;
  CLI::App* trans = tensor->add_subcommand("transversality", "contraction residuals against k");
  trans->add_option("--in", trans_in, "tensor JSON file")->required();
  trans->add_option("--k", trans_k, "direction x,y,z (defaults to the file's k)");
  trans->callback([&] { run_tensor_transversality(trans_in, trans_k); });

  // helicity
  std::string hel_k;
  CLI::App* hel = app.add_subcommand("helicity", "helicity basis for a direction");
  hel->add_option("--k", hel_k, "direction x,y,z")->required();
  hel->callback([&] { run_helicity(hel_k); });

  // evolve
  std::string ev_config, ev_state, ev_out, ev_save;
  CLI::App* ev = app.add_subcommand("evolve", "evolve a state and log observables");
  ev->add_option("--config", ev_config, "evolution config JSON")->required();
  ev->add_option("--state", ev_state, "initial state file (overrides \"initial\")");
  ev->add_option("--out", ev_out, "observables CSV path (stdout if omitted)");
  ev->add_option("--save-state", ev_save, "write the final state here");
  ev->callback([&] { run_evolve(ev_config, ev_state, ev_out, ev_save); });

  // toymodel
  std::string tm_model;
  double tm_omega0 = 1.0, tm_k = 1.0;
  CLI::App* tm = app.add_subcommand("toymodel", "rotating energy distribution report");
  tm->add_option("--model", tm_model, "disk, ring or string")->required();
  tm->add_option("--omega0", tm_omega0, "total energy / angular frequency")->required();
  tm->add_option("--k", tm_k, "ring width parameter");
  tm->callback([&] { run_toymodel(tm_model, tm_omega0, tm_k); });

  // maxwell-demo
  std::string mx_config;
  CLI::App* mx = app.add_subcommand("maxwell-demo", "curl/divergence residual exhibit");
  mx->add_option("--config", mx_config, "demo config JSON")->required();
  mx->callback([&] { run_maxwell_demo(mx_config); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
