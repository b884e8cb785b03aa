// Copyright 2026 The augerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pipeline/run.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "common/error.hpp"
#include "common/units.hpp"
#include "common/version.hpp"
#include "fci/auger_reference.hpp"
#include "groundstate/anneal.hpp"
#include "groundstate/gates.hpp"
#include "groundstate/service.hpp"
#include "groundstate/vqe.hpp"
#include "hamiltonian/fermion.hpp"
#include "molint/integrals.hpp"
#include "molint/motransform.hpp"
#include "pipeline/artifacts.hpp"
#include "qsceom/transition.hpp"
#include "qsceom/workload.hpp"
#include "spectra/auger.hpp"
#include "spectra/xas.hpp"

namespace augerqc::pipeline {

using nlohmann::json;
using hamiltonian::Irrep;

namespace {

molint::Geometry read_geometry(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InvalidArgument("cannot open geometry " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return molint::parse_xyz(ss.str());
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

Eigen::MatrixXd matrix_from(const json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Eigen::MatrixXd out(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json gates_json(const groundstate::GateCount& g) {
  return {{"total", g.total},
          {"cnot", g.cnot},
          {"rotations", g.rotations},
          {"basis_changes", g.basis_changes},
          {"exponentials", g.exponentials}};
}

std::string irrep_str(Irrep g) { return hamiltonian::irrep_name(g); }

json solution_json(const qsceom::ChannelBasis& basis, const qsceom::EigenSolution& sol) {
  json blocks = json::array();
  for (const auto& b : sol.blocks) {
    json ops = json::array();
    for (const auto& op : basis.block(b.irrep)) ops.push_back(op.to_string());
    blocks.push_back({{"irrep", irrep_str(b.irrep)},
                      {"operators", ops},
                      {"energies", vector_json(b.energies)},
                      {"s2", b.s2},
                      {"multiplicity", b.multiplicity},
                      {"max_residual", b.max_residual},
                      {"vectors_re", matrix_json(b.vectors.real())},
                      {"vectors_im", matrix_json(b.vectors.imag())}});
  }
  return {{"channel", qsceom::to_string(sol.channel)},
          {"n_electrons", basis.n_electrons()},
          {"counts", basis.counts()},
          {"size", basis.size()},
          {"blocks", blocks},
          {"warnings", sol.warnings}};
}

qsceom::EigenSolution solution_from(const json& j, const qsceom::ChannelBasis& basis) {
  qsceom::EigenSolution sol;
  sol.channel = basis.channel;
  if (j.at("counts").get<std::array<std::size_t, 4>>() != basis.counts())
    throw InvalidArgument("qsceom.json does not match the operator basis of this config; rerun the 'qsceom' stage");
  const auto& blocks = j.at("blocks");
  for (std::size_t s = 0; s < 4; ++s) {
    const auto& bj = blocks.at(s);
    auto& b = sol.blocks[s];
    b.irrep = hamiltonian::parse_irrep(bj.at("irrep").get<std::string>());
    const auto e = bj.at("energies").get<std::vector<double>>();
    b.energies = Eigen::Map<const Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
    b.s2 = bj.at("s2").get<std::vector<double>>();
    b.multiplicity = bj.at("multiplicity").get<std::vector<int>>();
    b.max_residual = bj.at("max_residual").get<double>();
    const Eigen::MatrixXd re = matrix_from(bj.at("vectors_re"));
    const Eigen::MatrixXd im = matrix_from(bj.at("vectors_im"));
    b.vectors = re.cast<std::complex<double>>() + std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
    if (b.energies.size() == 0) b.vectors.resize(static_cast<Eigen::Index>(basis.blocks[s].size()), 0);
  }
  return sol;
}

std::string sticks_csv(const spectra::AugerSpectrum& a) {
  std::string out = "E_kin_eV,gamma_au,gamma_rel,multiplicity,configuration\n";
  for (const auto& c : a.channels)
    if (c.reported)
      out += num(c.e_kin_ev) + "," + num(c.gamma) + "," + num(c.gamma_rel) + "," +
             qsceom::multiplicity_label(c.multiplicity) + "," + c.configuration.label + "\n";
  return out;
}

json channels_json(const spectra::AugerSpectrum& a) {
  json rows = json::array();
  for (std::size_t k = 0; k < a.channels.size(); ++k) {
    const auto& c = a.channels[k];
    rows.push_back({{"channel", k + 1},
                    {"configuration", c.configuration.label},
                    {"multiplicity", qsceom::multiplicity_label(c.multiplicity)},
                    {"e_kin_ev", c.e_kin_ev},
                    {"gamma_rel", c.gamma_rel},
                    {"gamma_au", c.gamma},
                    {"reported", c.reported},
                    {"dip_irrep", irrep_str(c.dip_irrep)},
                    {"dip_state", c.dip_state},
                    {"e_dip", c.e_dip},
                    {"s2", c.s2},
                    {"leading_weight", c.configuration.weight},
                    {"mixed", c.configuration.mixed}});
  }
  json initial;
  if (!a.channels.empty())
    initial = {{"irrep", irrep_str(a.channels.front().ip_irrep)},
               {"state", a.channels.front().ip_state},
               {"e_ip", a.channels.front().e_ip}};
  return {{"initial_state", initial}, {"channels", rows}, {"warnings", a.warnings}};
}

json top_channels(const spectra::AugerSpectrum& a, std::size_t n) {
  std::vector<const spectra::AugerChannelResult*> v;
  for (const auto& c : a.channels) v.push_back(&c);
  std::stable_sort(v.begin(), v.end(), [](auto* x, auto* y) { return x->gamma_rel > y->gamma_rel; });
  json out = json::array();
  for (std::size_t k = 0; k < std::min(n, v.size()); ++k)
    out.push_back({{"configuration", v[k]->configuration.label},
                   {"multiplicity", qsceom::multiplicity_label(v[k]->multiplicity)},
                   {"e_kin_ev", v[k]->e_kin_ev},
                   {"gamma_rel", v[k]->gamma_rel}});
  return out;
}

// SCF rebuilt from scf.json: integrals are recomputed from the geometry,
// orbitals come from the artifact.
struct ScfContext {
  molint::Geometry geometry;
  molint::ScfResult scf;
};

struct ActiveContext {
  hamiltonian::SpinOrbitalHamiltonian ham;
  int n_qubits = 0;
  int n_electrons = 0;
  groundstate::UccsdPool pool;
  std::unique_ptr<groundstate::EnergyEvaluator> eval;
};

ActiveContext active_space(const RunConfig& cfg, const molint::ScfResult& scf) {
  ActiveContext a;
  a.ham = molint::mo_transform(scf, cfg.frozen_core, cfg.mo_irreps);
  a.n_qubits = a.ham.n_spin_orbitals();
  a.n_electrons = scf.n_electrons - 2 * static_cast<int>(cfg.frozen_core.size());
  a.pool = groundstate::build_uccsd_pool(a.n_qubits, a.n_electrons);
  a.eval = std::make_unique<groundstate::EnergyEvaluator>(hamiltonian::hamiltonian_to_pauli(a.ham, a.n_qubits),
                                                          a.n_qubits, groundstate::lowest_occupation(a.n_electrons));
  return a;
}

hamiltonian::SpinOrbitalHamiltonian full_hamiltonian(const RunConfig& cfg, const molint::ScfResult& scf) {
  auto ham = molint::mo_hamiltonian(scf, cfg.mo_irreps);
  ham.core_spatial_indices = cfg.frozen_core;
  return ham;
}

ScfContext load_scf(const RunConfig& cfg) {
  const auto j = read_json(cfg.output_dir / "scf.json", "scf");
  ScfContext c;
  c.geometry = read_geometry(cfg.geometry);
  c.scf.basis = molint::build_sto3g(c.geometry);
  c.scf.ao = molint::compute_integrals(c.scf.basis);
  c.scf.coefficients = matrix_from(j.at("coefficients"));
  const auto eps = j.at("orbital_energies").get<std::vector<double>>();
  c.scf.orbital_energies = Eigen::Map<const Eigen::VectorXd>(eps.data(), static_cast<Eigen::Index>(eps.size()));
  c.scf.total_energy = j.at("total_energy");
  c.scf.electronic_energy = j.at("electronic_energy");
  c.scf.nuclear_repulsion = j.at("nuclear_repulsion");
  c.scf.n_electrons = j.at("n_electrons");
  c.scf.iterations = j.at("iterations");
  if (c.scf.coefficients.rows() != static_cast<Eigen::Index>(c.scf.basis.size()))
    throw InvalidArgument("scf.json does not match the geometry; rerun the 'scf' stage");
  return c;
}

// U from ground.json, embedded past the frozen core qubits.
simulator::Circuit load_ground_circuit(const RunConfig& cfg, const ActiveContext& a, double* energy) {
  const auto j = read_json(cfg.output_dir / "ground.json", "ground");
  if (energy) *energy = j.at("energy");
  simulator::Circuit c;
  if (j.at("ansatz") == "uccsd")
    c = groundstate::uccsd_circuit(a.pool, j.at("parameters").get<std::vector<double>>());
  else
    c = a.pool.pool.circuit(j.at("tokens").get<std::vector<std::size_t>>());
  return simulator::embed_unitary(c, 2 * static_cast<int>(cfg.frozen_core.size()));
}

double lowest_sector_energy(const hamiltonian::SpinOrbitalHamiltonian& ham, int n_electrons) {
  fci::SectorSpec spec;
  spec.n_electrons = n_electrons;
  spec.two_sz = n_electrons % 2;
  return fci::sector_diagonalize(ham, spec).energies(0);
}

json lowest(const Eigen::VectorXd& e, Eigen::Index n) { return vector_json(e.head(std::min(n, e.size()))); }

}  // namespace

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)) {}

const std::vector<std::string>& Pipeline::stage_names() {
  static const std::vector<std::string> names = {"scf", "ground", "qsceom", "auger", "xas", "fci-ref", "workload", "all"};
  return names;
}

json Pipeline::run(const std::string& stage) {
  if (stage == "all") {
    json out;
    for (const auto& s : {"scf", "ground", "qsceom"}) out[s] = run(s);
    if (cfg_.auger.enabled) out["auger"] = run("auger");
    if (cfg_.xas.enabled) out["xas"] = run("xas");
    out["fci-ref"] = run("fci-ref");
    if (cfg_.auger.enabled) out["workload"] = run("workload");
    return out;
  }
  log("stage " + stage);
  if (stage == "scf") return stage_scf();
  if (stage == "ground") return stage_ground();
  if (stage == "qsceom") return stage_qsceom();
  if (stage == "auger") return stage_auger();
  if (stage == "xas") return stage_xas();
  if (stage == "fci-ref") return stage_fci_ref();
  if (stage == "workload") return stage_workload();
  throw InvalidArgument("unknown stage \"" + stage + "\" (scf, ground, qsceom, auger, xas, fci-ref, workload, all)");
}

void Pipeline::record(const std::string& stage, const std::vector<std::string>& artifacts) {
  const auto path = cfg_.output_dir / "manifest.json";
  json m;
  if (std::filesystem::exists(path)) m = read_json(path, "any");
  const auto hash = config_hash(cfg_);
  // a changed config invalidates the stage list
  if (!m.is_object() || m.value("config_hash", "") != hash) m = json::object();
  m["tool"] = "augerqc";
  m["version"] = kVersion;
  m["config"] = cfg_.source.string();
  m["config_hash"] = hash;
  m["seeds"] = {{"ground", cfg_.seed}};
  m["stages"][stage] = {{"artifacts", artifacts}};
  write_json(path, m);
}

json Pipeline::stage_scf() {
  const auto geom = read_geometry(cfg_.geometry);
  const auto n_ao = molint::build_sto3g(geom).size();
  if (cfg_.mo_irreps.size() != n_ao)
    throw InvalidArgument("mo_irreps lists " + std::to_string(cfg_.mo_irreps.size()) + " labels for " +
                          std::to_string(n_ao) + " orbitals");
  const auto scf = molint::run_rhf(geom, cfg_.charge);
  const auto names = qsceom::orbital_labels(cfg_.mo_irreps, static_cast<int>(n_ao));
  std::vector<std::string> irr;
  for (auto g : cfg_.mo_irreps) irr.push_back(irrep_str(g));
  json j = {{"total_energy", scf.total_energy},
            {"electronic_energy", scf.electronic_energy},
            {"nuclear_repulsion", scf.nuclear_repulsion},
            {"n_electrons", scf.n_electrons},
            {"iterations", scf.iterations},
            {"orbital_energies", vector_json(scf.orbital_energies)},
            {"orbital_names", names},
            {"mo_irreps", irr},
            {"coefficients", matrix_json(scf.coefficients)}};
  write_json(cfg_.output_dir / "scf.json", j);
  const auto active = molint::mo_transform(scf, cfg_.frozen_core, cfg_.mo_irreps);
  write_text(cfg_.output_dir / "active.fcidump", molint::write_fcidump(active));
  record("scf", {"scf.json", "active.fcidump"});
  return {{"total_energy", scf.total_energy}, {"iterations", scf.iterations}, {"n_orbitals", n_ao}};
}

json Pipeline::stage_ground() {
  const auto ctx = load_scf(cfg_);
  const auto a = active_space(cfg_, ctx.scf);
  const double e_fci = lowest_sector_energy(a.ham, a.n_electrons);
  json j = {{"method", to_string(cfg_.ground.method)},
            {"n_qubits", a.n_qubits},
            {"n_electrons", a.n_electrons},
            {"fci_energy", e_fci},
            {"seed", cfg_.seed}};
  simulator::Circuit circuit;
  double energy = 0.0;
  std::vector<std::string> artifacts = {"ground.json"};
  switch (cfg_.ground.method) {
    case GroundMethod::Vqe: {
      const auto r = groundstate::vqe_uccsd(*a.eval, a.pool);
      energy = r.energy;
      circuit = r.circuit;
      j["ansatz"] = "uccsd";
      j["parameters"] = r.parameters;
      j["converged"] = r.converged;
      j["iterations"] = r.iterations;
      j["evaluations"] = r.evaluations;
      j["gradient_norm"] = r.gradient_norm;
      break;
    }
    case GroundMethod::Anneal: {
      groundstate::AnnealSchedule sch;
      sch.max_evaluations = cfg_.ground.max_evaluations;
      const auto r = groundstate::anneal_tokens(*a.eval, a.pool.pool, cfg_.ground.depth, sch, cfg_.seed);
      energy = r.best.energy;
      circuit = a.pool.pool.circuit(r.best.tokens);
      j["ansatz"] = "tokens";
      j["tokens"] = r.best.tokens;
      j["depth"] = cfg_.ground.depth;
      j["evaluations"] = r.evaluations;
      std::string trace = "step,best_energy_hartree\n";
      for (const auto& rec : r.improvements) trace += std::to_string(rec.step) + "," + num(rec.energy) + "\n";
      write_text(cfg_.output_dir / "anneal_trace.csv", trace);
      artifacts.push_back("anneal_trace.csv");
      break;
    }
    case GroundMethod::ExternalProposer: {
      groundstate::ServiceOptions so;
      so.max_batch = cfg_.proposer.batch;
      so.depth_hint = cfg_.ground.depth;
      so.buffer_capacity = cfg_.proposer.buffer;
      groundstate::ProposerService svc(*a.eval, a.pool.pool, so);
      svc.serve_tcp(cfg_.proposer.port,
                    [this](int port) { log("proposer service listening on 127.0.0.1:" + std::to_string(port)); });
      if (svc.buffer().records().empty()) throw InvalidArgument("the external proposer evaluated no sequences");
      const auto& best = svc.buffer().records().front();
      energy = best.energy;
      circuit = a.pool.pool.circuit(best.tokens);
      j["ansatz"] = "tokens";
      j["tokens"] = best.tokens;
      j["depth"] = best.tokens.size();
      j["evaluations"] = svc.evaluations();
      break;
    }
  }
  j["energy"] = energy;
  j["error_mha"] = (energy - e_fci) * 1e3;
  j["gates"] = gates_json(groundstate::gate_count_report(circuit));
  write_json(cfg_.output_dir / "ground.json", j);
  record("ground", artifacts);
  return {{"energy", energy}, {"fci_energy", e_fci}, {"error_mha", j["error_mha"]}, {"cnot", j["gates"]["cnot"]}};
}

json Pipeline::stage_qsceom() {
  const auto ctx = load_scf(cfg_);
  const auto a = active_space(cfg_, ctx.scf);
  const auto ham = full_hamiltonian(cfg_, ctx.scf);
  const int nq = ham.n_spin_orbitals();
  qsceom::SubspaceEngine eng(nq, load_ground_circuit(cfg_, a, nullptr));
  const simulator::CompiledOperator hc(hamiltonian::hamiltonian_to_pauli(ham, nq), nq);
  const simulator::CompiledOperator s2(hamiltonian::s2_operator(nq), nq);

  std::vector<qsceom::Channel> channels;
  if (cfg_.auger.enabled) channels = {qsceom::Channel::IP, qsceom::Channel::DIP};
  if (cfg_.xas.enabled) channels.push_back(qsceom::Channel::EE);
  if (channels.empty()) throw InvalidArgument("no spectrum enabled: set spectra.auger or spectra.xas");

  json j = {{"n_qubits", nq}, {"channels", json::object()}};
  json summary = json::object();
  for (auto ch : channels) {
    const auto basis = qsceom::enumerate_operators(ch, ham);
    const auto m = qsceom::measure_blocks(eng, basis, hc);
    const auto sm = qsceom::measure_blocks(eng, basis, s2);
    const auto sol = ch == qsceom::Channel::DIP ? qsceom::s2_purify(m, sm, basis.n_electrons())
                                                : qsceom::solve_blocks(m, &sm, basis.n_electrons());
    j["channels"][qsceom::to_string(ch)] = solution_json(basis, sol);
    summary[qsceom::to_string(ch)] = {{"counts", basis.counts()}, {"lowest", spectra::lowest_state(sol).energy}};
  }
  j["evaluations"] = eng.evaluations();
  write_json(cfg_.output_dir / "qsceom.json", j);
  record("qsceom", {"qsceom.json"});
  summary["evaluations"] = eng.evaluations();
  return summary;
}

json Pipeline::stage_auger() {
  if (!cfg_.auger.enabled) throw InvalidArgument("spectra.auger is not enabled in this config");
  const auto ctx = load_scf(cfg_);
  const auto a = active_space(cfg_, ctx.scf);
  const auto ham = full_hamiltonian(cfg_, ctx.scf);
  const auto q = read_json(cfg_.output_dir / "qsceom.json", "qsceom");
  if (!q.at("channels").contains("IP") || !q.at("channels").contains("DIP"))
    throw MissingArtifact("qsceom.json has no IP/DIP solutions; run the 'qsceom' stage with spectra.auger enabled");
  // table problems surface before any simulation
  const auto table = spectra::load_atomic_integrals(cfg_.auger.table, cfg_.emitter);
  const auto ip = qsceom::enumerate_operators(qsceom::Channel::IP, ham);
  const auto dip = qsceom::enumerate_operators(qsceom::Channel::DIP, ham);
  const auto ip_sol = solution_from(q["channels"]["IP"], ip);
  const auto dip_sol = solution_from(q["channels"]["DIP"], dip);
  const int nq = ham.n_spin_orbitals();
  qsceom::SubspaceEngine eng(nq, load_ground_circuit(cfg_, a, nullptr));
  const auto init = spectra::lowest_state(ip_sol);
  std::vector<qsceom::TransitionRDM> rdms;
  for (Irrep g : hamiltonian::kAllIrreps)
    rdms.push_back(qsceom::auger_rdm(eng, ham, ip, ip_sol, init.irrep, init.index, dip, dip_sol, g));
  const auto mbs = spectra::mbs_project(ctx.scf, spectra::find_atom(ctx.geometry, cfg_.emitter));
  const auto names = qsceom::orbital_labels(cfg_.mo_irreps, ham.n_spatial);
  spectra::AugerOptions opts;
  opts.hwhm_ev = cfg_.auger.hwhm_ev;
  opts.reporting_floor = cfg_.auger.reporting_floor;
  opts.multiplet_sum = cfg_.auger.multiplet_sum;
  const auto res = spectra::auger_spectrum(dip, ip_sol, dip_sol, rdms, mbs, table, names, opts);
  for (const auto& w : res.warnings) log("warning: " + w);

  json cj = channels_json(res);
  cj["table"] = {{"path", cfg_.auger.table.string()}, {"provenance", table.provenance}};
  cj["hwhm_ev"] = opts.hwhm_ev;
  cj["reporting_floor"] = opts.reporting_floor;
  cj["rdm_evaluations"] = eng.evaluations();
  write_json(cfg_.output_dir / "auger_channels.json", cj);
  write_text(cfg_.output_dir / "auger_sticks.csv", sticks_csv(res));
  write_text(cfg_.output_dir / "auger_curve.csv", curve_csv(res.spectrum));
  std::vector<std::string> artifacts = {"auger_channels.json", "auger_sticks.csv", "auger_curve.csv"};
  if (cfg_.svg) {
    write_text(cfg_.output_dir / "auger.svg",
               svg_plot(res.spectrum, cfg_.name + " Auger spectrum (q-sc-EOM)", "Kinetic energy (eV)", true));
    artifacts.push_back("auger.svg");
  }
  record("auger", artifacts);
  return {{"channels", res.channels.size()}, {"top", top_channels(res, 5)}, {"warnings", res.warnings}};
}

json Pipeline::stage_xas() {
  if (!cfg_.xas.enabled) throw InvalidArgument("spectra.xas is not enabled in this config");
  const auto ctx = load_scf(cfg_);
  const auto a = active_space(cfg_, ctx.scf);
  const auto ham = full_hamiltonian(cfg_, ctx.scf);
  const auto q = read_json(cfg_.output_dir / "qsceom.json", "qsceom");
  if (!q.at("channels").contains("EE"))
    throw MissingArtifact("qsceom.json has no EE solution; run the 'qsceom' stage with spectra.xas enabled");
  const auto ee = qsceom::enumerate_operators(qsceom::Channel::EE, ham);
  const auto sol = solution_from(q["channels"]["EE"], ee);
  const int nq = ham.n_spin_orbitals();
  const auto u = load_ground_circuit(cfg_, a, nullptr);
  qsceom::SubspaceEngine eng(nq, u);
  auto psi = simulator::StateVector::basis_state(nq, ee.reference);
  simulator::apply_circuit(psi, u);
  const double e0 = simulator::CompiledOperator(hamiltonian::hamiltonian_to_pauli(ham, nq), nq).expectation(psi).real();
  const auto x = spectra::xas_spectrum(eng, ee, sol, e0, molint::mo_dipoles(ctx.scf), cfg_.xas.hwhm_ev);

  std::string sticks = "E_eV,f,irrep,state\n";
  json rows = json::array();
  for (const auto& t : x.transitions) {
    sticks += num(t.energy_ev) + "," + num(t.f) + "," + irrep_str(t.irrep) + "," + std::to_string(t.state) + "\n";
    rows.push_back({{"irrep", irrep_str(t.irrep)},
                    {"state", t.state},
                    {"excitation_hartree", t.excitation},
                    {"energy_ev", t.energy_ev},
                    {"f", t.f}});
  }
  write_json(cfg_.output_dir / "xas.json",
             {{"ground_energy", e0}, {"hwhm_ev", cfg_.xas.hwhm_ev}, {"transitions", rows}});
  write_text(cfg_.output_dir / "xas_sticks.csv", sticks);
  write_text(cfg_.output_dir / "xas_curve.csv", curve_csv(x.spectrum));
  std::vector<std::string> artifacts = {"xas.json", "xas_sticks.csv", "xas_curve.csv"};
  if (cfg_.svg) {
    write_text(cfg_.output_dir / "xas.svg", svg_plot(x.spectrum, cfg_.name + " K-edge XAS (q-sc-EOM)", "Photon energy (eV)"));
    artifacts.push_back("xas.svg");
  }
  record("xas", artifacts);
  double fmax = 0.0;
  for (const auto& t : x.transitions) fmax = std::max(fmax, t.f);
  return {{"transitions", x.transitions.size()}, {"ground_energy", e0}, {"max_f", fmax}};
}

json Pipeline::stage_fci_ref() {
  const auto ctx = load_scf(cfg_);
  const auto ham = full_hamiltonian(cfg_, ctx.scf);
  const int n_el = *ham.n_electrons;
  json j;
  j["ground"] = {{"n_electrons", n_el}, {"energy", lowest_sector_energy(ham, n_el)}};
  if (!cfg_.frozen_core.empty()) {
    const auto active = molint::mo_transform(ctx.scf, cfg_.frozen_core, cfg_.mo_irreps);
    j["ground"]["frozen_core_energy"] =
        lowest_sector_energy(active, n_el - 2 * static_cast<int>(cfg_.frozen_core.size()));
  }
  std::vector<std::string> artifacts = {"fci_reference.json"};
  json summary = {{"ground", j["ground"]}};

  if (cfg_.auger.enabled) {
    const auto table = spectra::load_atomic_integrals(cfg_.auger.table, cfg_.emitter);
    const auto mbs = spectra::mbs_project(ctx.scf, spectra::find_atom(ctx.geometry, cfg_.emitter));
    spectra::AugerOptions opts;
    opts.hwhm_ev = cfg_.auger.hwhm_ev;
    opts.reporting_floor = cfg_.auger.reporting_floor;
    opts.multiplet_sum = cfg_.auger.multiplet_sum;
    const auto r = fci::fci_auger_reference(ham, mbs, table, qsceom::orbital_labels(cfg_.mo_irreps, ham.n_spatial), opts);
    json ipj = json::object(), dipj = json::object();
    for (Irrep g : hamiltonian::kAllIrreps) {
      const auto s = static_cast<std::size_t>(hamiltonian::irrep_slot(g));
      ipj[irrep_str(g)] = lowest(r.ip_energies[s], 10);
      dipj[irrep_str(g)] = lowest(r.dip_energies[s], 20);
    }
    j["auger"] = {{"core_hole", {{"irrep", irrep_str(r.ip_irrep)},
                                 {"state", r.ip_state},
                                 {"energy", r.e_ip},
                                 {"core_occupation", r.ip_core_occupation}}},
                  {"ip_lowest", ipj},
                  {"dip_lowest", dipj}};
    json cj = channels_json(r.spectrum);
    cj["table"] = {{"path", cfg_.auger.table.string()}, {"provenance", table.provenance}};
    write_json(cfg_.output_dir / "fci_auger_channels.json", cj);
    write_text(cfg_.output_dir / "fci_auger_sticks.csv", sticks_csv(r.spectrum));
    write_text(cfg_.output_dir / "fci_auger_curve.csv", curve_csv(r.spectrum.spectrum));
    artifacts.insert(artifacts.end(), {"fci_auger_channels.json", "fci_auger_sticks.csv", "fci_auger_curve.csv"});
    if (cfg_.svg) {
      write_text(cfg_.output_dir / "fci_auger.svg",
                 svg_plot(r.spectrum.spectrum, cfg_.name + " Auger spectrum (FCI)", "Kinetic energy (eV)", true));
      artifacts.push_back("fci_auger.svg");
    }
    summary["auger"] = {{"core_hole_energy", r.e_ip}, {"top", top_channels(r.spectrum, 5)}};
  }
  if (cfg_.xas.enabled) {
    json ee = json::object();
    const double e0 = j["ground"]["energy"];
    for (Irrep g : hamiltonian::kAllIrreps) {
      fci::SectorSpec spec;
      spec.n_electrons = n_el;
      spec.restricted_qubits = 0;
      for (int c : cfg_.frozen_core) spec.restricted_qubits |= std::uint64_t{3} << (2 * c);
      spec.restricted_electrons = 2 * static_cast<int>(cfg_.frozen_core.size()) - 1;
      spec.irrep = g;
      const auto e = fci::sector_diagonalize(ham, spec).energies;
      Eigen::VectorXd ev = (e.array() - e0) * units::kEvPerHartree;
      ee[irrep_str(g)] = {{"energies", lowest(e, 20)}, {"excitation_ev", lowest(ev, 20)}};
    }
    j["core_excited"] = ee;
  }
  write_json(cfg_.output_dir / "fci_reference.json", j);
  record("fci-ref", artifacts);
  return summary;
}

json Pipeline::stage_workload() {
  const auto ctx = load_scf(cfg_);
  if (cfg_.frozen_core.empty()) throw InvalidArgument("workload needs a core orbital");
  const auto ham = full_hamiltonian(cfg_, ctx.scf);
  const auto ip = qsceom::enumerate_operators(qsceom::Channel::IP, ham);
  const auto dip = qsceom::enumerate_operators(qsceom::Channel::DIP, ham);
  const Irrep sector = cfg_.mo_irreps.at(static_cast<std::size_t>(cfg_.frozen_core.front()));
  const auto w = qsceom::workload_counts(ham, ip, dip, sector);
  json j = {{"ip_sector", irrep_str(w.ip_sector)},
            {"n_ip", w.n_ip},
            {"n_dip", w.n_dip},
            {"eval_m_ip", w.eval_m_ip},
            {"eval_m_dip", w.eval_m_dip},
            {"n_csr", w.n_csr},
            {"eval_r", w.eval_r},
            {"total_m_ip", w.total_m_ip},
            {"total_m_dip", w.total_m_dip},
            {"total_m", w.total_m},
            {"total_csr", w.total_csr},
            {"total_r", w.total_r},
            {"total", w.total}};
  write_json(cfg_.output_dir / "workload.json", j);
  record("workload", {"workload.json"});
  return j;
}

}  // namespace augerqc::pipeline
