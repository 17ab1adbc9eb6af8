// Command-line interface: exact transforms, hyperdeterminants, model
// parametrization and verification, orbit classification, and cumulant-space
// membership/optimization, all with deterministic JSON output.

#include "bct/classify.hpp"
#include "bct/cumulant_space.hpp"
#include "bct/hyperdet.hpp"
#include "bct/json_io.hpp"
#include "bct/models.hpp"
#include "bct/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bct::SchemaError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw bct::SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

bct::Coords parse_coords(const std::string& s) {
  if (s == "prob") return bct::Coords::prob;
  if (s == "moment") return bct::Coords::moment;
  if (s == "cumulant") return bct::Coords::cumulant;
  throw bct::SchemaError("unknown coordinate system: " + s);
}

bct::HiddenSubsetModel parse_subsets(const std::string& spec, int n_hint) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  tokens.push_back(cur);
  int n = n_hint;
  if (n == 0) {
    for (const auto& t : tokens)
      for (char c : t)
        if (c >= '1' && c <= '6') n = std::max(n, c - '0');
  }
  if (n == 0) throw bct::SchemaError("cannot infer n from subsets: " + spec);
  bct::HiddenSubsetModel h;
  h.n = n;
  for (const auto& t : tokens) {
    std::string body = (t == "{}") ? "" : t;
    auto mask = bct::subset_from_str(body, n);
    if (!mask) throw bct::SchemaError("malformed subset token: " + t);
    h.subsets.push_back(*mask);
  }
  return h;
}

bct::CSISplitModel parse_csi(const std::string& spec) {
  std::vector<std::string> splits;
  std::string cur;
  for (char c : spec) {
    if (c == ';') {
      splits.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  splits.push_back(cur);
  int m = 0;
  for (const auto& s : splits)
    for (char c : s)
      if (c >= '1' && c <= '9') m = std::max(m, c - '0');
  if (m == 0) throw bct::SchemaError("cannot infer class count from: " + spec);
  bct::CSISplitModel c;
  c.n = static_cast<int>(splits.size());
  c.m = m;
  for (const auto& s : splits) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw bct::SchemaError("split missing '|': " + s);
    auto first = bct::subset_from_str(s.substr(0, bar), m);
    auto second = bct::subset_from_str(s.substr(bar + 1), m);
    if (!first || !second || (*first & *second) || (*first | *second) != bct::full_mask(m))
      throw bct::SchemaError("malformed split: " + s);
    c.first_blocks.push_back(*first);
  }
  return c;
}

struct MRange {
  int lo = 1, hi = 1 << 30;
};

MRange parse_m_range(const std::string& s) {
  MRange r;
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, dots));
    r.hi = std::stoi(s.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw bct::SchemaError("bad m range: " + s);
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for binary tensors in probability/moment/cumulant coordinates"};
  app.require_subcommand(1);

  // transform
  std::string tr_input, tr_from, tr_to;
  auto* tr = app.add_subcommand("transform", "convert a table between coordinate systems");
  tr->add_option("input", tr_input, "table JSON file")->required();
  tr->add_option("--from", tr_from, "source coordinates (must match the file tag)")->required();
  tr->add_option("--to", tr_to, "target coordinates")->required();

  // hyperdet
  int hd_n = 0;
  std::string hd_eval;
  auto* hd = app.add_subcommand("hyperdet", "hyperdeterminant in cumulant coordinates");
  hd->add_option("--n", hd_n, "tensor order (2, 3 or 4)")->required();
  hd->add_option("--eval", hd_eval, "evaluate at a table instead of printing the polynomial");

  // model
  std::string mo_subsets, mo_csi, mo_action, mo_fixture;
  int mo_n = 0, mo_trials = 0;
  std::uint64_t mo_seed = 1;
  auto* mo = app.add_subcommand("model", "hidden subset / CSI split model operations");
  mo->add_option("action", mo_action, "param | codim | verify")->required();
  mo->add_option("fixture", mo_fixture,
                 "generator fixture for verify: secant4 | tangential4 | "
                 "principal_minors4 | pairsplit4 | det4");
  mo->add_option("--subsets", mo_subsets, "comma-separated subsets, {} for the empty set");
  mo->add_option("--csi", mo_csi, "semicolon-separated splits like 1|234;2|134;...");
  mo->add_option("--n", mo_n, "number of observed variables (default: inferred)");
  mo->add_option("--seed", mo_seed, "seed for randomized checks");
  mo->add_option("--trials", mo_trials, "sample count for randomized checks");

  // classify
  int cl_n = 0;
  std::string cl_filter = "none", cl_m;
  bool cl_codim = false;
  std::uint64_t cl_seed = 1;
  auto* cl = app.add_subcommand("classify", "orbit census of hidden subset models");
  cl->add_option("--n", cl_n, "number of observed variables (<= 4)")->required();
  cl->add_option("--filter", cl_filter, "none | nondeg | a1a2");
  cl->add_option("--m", cl_m, "restrict hidden class counts, e.g. 2..4");
  cl->add_flag("--codim", cl_codim, "compute the codimension of each representative");
  cl->add_option("--seed", cl_seed, "seed for codimension ranks");

  // optimize
  int op_n = 0, op_starts = 1000;
  std::uint64_t op_seed = 1;
  auto* op = app.add_subcommand("optimize", "maximize |k_{1..n}| over the probability simplex");
  op->add_option("--n", op_n, "number of variables (<= 5)")->required();
  op->add_option("--starts", op_starts, "number of random starts");
  op->add_option("--seed", op_seed, "seed");

  // member
  std::string me_input;
  auto* me = app.add_subcommand("member", "exact membership test for the space of cumulants");
  me->add_option("input", me_input, "cumulant table JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (tr->parsed()) {
    bct::BinaryTable t = bct::table_from_json(load_json(tr_input));
    bct::Coords from = parse_coords(tr_from), to = parse_coords(tr_to);
    if (t.coords() != from)
      throw bct::SchemaError(std::string("--from says ") + bct::coords_name(from) +
                             " but the file is tagged " + bct::coords_name(t.coords()));
    emit(bct::table_to_json(bct::convert(t, to)));
    return 0;
  }

  if (hd->parsed()) {
    if (hd_n < 2 || hd_n > 4)
      throw bct::UnsupportedError("hyperdet: only n = 2, 3, 4 are supported");
    if (!hd_eval.empty()) {
      bct::BinaryTable t = bct::table_from_json(load_json(hd_eval));
      if (t.n() != hd_n) throw bct::SchemaError("hyperdet: table dimension mismatch");
      emit(json{{"n", hd_n}, {"value", bct::rational_str(bct::hyperdet_eval(t, hd_n))}});
      return 0;
    }
    const bct::SparsePoly& d = bct::hyperdet_cumulants(hd_n);
    auto grade = bct::zgrade(d);
    emit(json{{"n", hd_n},
              {"terms", d.num_terms()},
              {"zdeg", grade.degree.deg},
              {"poly", d.str()}});
    return 0;
  }

  if (mo->parsed()) {
    std::optional<bct::HiddenSubsetModel> model;
    if (!mo_subsets.empty() && !mo_csi.empty())
      throw bct::SchemaError("model: give either --subsets or --csi, not both");
    if (!mo_subsets.empty()) model = parse_subsets(mo_subsets, mo_n);
    if (!mo_csi.empty()) model = bct::csi_to_hsm(parse_csi(mo_csi));
    if (mo_action == "param" || mo_action == "codim") {
      if (!model) throw bct::SchemaError("model: --subsets or --csi required");
      if (mo_action == "param") {
        emit(bct::parametrization_json(bct::hsm_parametrization(*model)));
      } else {
        emit(json{{"n", model->n},
                  {"m", model->m()},
                  {"codimension", bct::model_codimension(*model, mo_seed)}});
      }
      return 0;
    }
    if (mo_action != "verify") throw bct::SchemaError("model: unknown action " + mo_action);
    json out{{"fixture", mo_fixture}};
    if (mo_fixture == "principal_minors4") {
      int trials = mo_trials > 0 ? mo_trials : 100;
      out["mode"] = "sampled";
      out["trials"] = trials;
      out["generators"] = static_cast<int>(bct::principal_minor_ideal_n4().size());
      out["all_zero"] = bct::verify_principal_minor_ideal(trials, mo_seed);
    } else {
      if (!model) throw bct::SchemaError("model: --subsets or --csi required");
      bct::ModelParametrization par = bct::hsm_parametrization(*model);
      const std::vector<bct::SparsePoly>* gens = nullptr;
      bct::VerifyMode mode = bct::VerifyMode::symbolic;
      int trials = 0;
      std::vector<bct::SparsePoly> det;
      if (mo_fixture == "secant4") gens = &bct::secant_ideal_generators_n4();
      else if (mo_fixture == "tangential4") gens = &bct::tangential_ideal_generators_n4();
      else if (mo_fixture == "pairsplit4") gens = &bct::example_model_ideal_n4();
      else if (mo_fixture == "det4") {
        det.push_back(bct::hyperdet_cumulants(4));
        gens = &det;
        mode = bct::VerifyMode::sampled;
        trials = mo_trials > 0 ? mo_trials : 200;
      } else {
        throw bct::SchemaError("model: unknown fixture " + mo_fixture);
      }
      out["mode"] = mode == bct::VerifyMode::symbolic ? "symbolic" : "sampled";
      if (trials) out["trials"] = trials;
      out["generators"] = static_cast<int>(gens->size());
      out["all_zero"] = bct::verify_vanishing(*gens, par, mode, trials, mo_seed);
    }
    emit(out);
    return 0;
  }

  if (cl->parsed()) {
    if (cl_n >= 5) throw bct::UnsupportedError("classify: n >= 5 is not enumerable");
    bct::CensusFilter f = cl_filter == "none" ? bct::CensusFilter::none
                          : cl_filter == "nondeg" ? bct::CensusFilter::nondegenerate
                          : cl_filter == "a1a2"
                              ? bct::CensusFilter::a1a2
                              : throw bct::SchemaError("unknown filter: " + cl_filter);
    MRange r;
    if (!cl_m.empty()) r = parse_m_range(cl_m);
    emit(bct::census_to_json(bct::classify(cl_n, f, r.lo, r.hi, cl_codim, cl_seed)));
    return 0;
  }

  if (op->parsed()) {
    if (op_n > 5) throw bct::UnsupportedError("optimize: n <= 5 only");
    emit(bct::optimize_report_json(bct::maximize_top_cumulant(op_n, op_starts, op_seed)));
    return 0;
  }

  if (me->parsed()) {
    bct::BinaryTable t = bct::table_from_json(load_json(me_input));
    if (t.coords() != bct::Coords::cumulant)
      throw bct::SchemaError("member: input must be a cumulant table");
    emit(bct::membership_report_json(bct::knspace_membership(t), t.n()));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bct::UnsupportedError& e) {
    emit(json{{"error", e.what()}});
    return 3;
  } catch (const bct::SchemaError& e) {
    emit(json{{"error", e.what()}});
    return 2;
  } catch (const std::invalid_argument& e) {
    emit(json{{"error", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}});
    return 1;
  }
}
