#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pstab/corpus.hpp"
#include "pstab/io.hpp"

namespace {

using pstab::Json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) pstab::fail(pstab::Errc::BadValue, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    pstab::fail(pstab::Errc::BadValue, std::string("malformed JSON: ") + e.what());
  }
}

struct Options {
  std::string input;
  long long bound = 2;
  unsigned long long seed = 0;
  std::string field = "Q";
  std::string format = "json";
};

void check_keys_top(const Json& obj, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) pstab::fail(pstab::Errc::BadValue, "expected a JSON object input");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) pstab::fail(pstab::Errc::UnknownKey, "unknown key '" + it.key() + "'", "input");
  }
}

Json dispatch(const std::string& command, const Options& opt, int& exit_code) {
  using namespace pstab;
  Field f = parse_field(opt.field);
  if (opt.bound < 1) fail(Errc::BadValue, "--bound must be >= 1");

  if (command == "corpus") {
    auto cases = run_corpus(opt.seed);
    Json out;
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : cases) {
      arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
      all = all && c.pass;
    }
    out["cases"] = std::move(arr);
    out["all_pass"] = all;
    if (!all) exit_code = 1;
    return out;
  }

  Json in = parse_json_text(read_input(opt.input));

  if (command == "classify") {
    GroupPoint x = parse_group_point_json(in, f);
    return report_to_json(classify(x, opt.seed));
  }
  if (command == "algebra") {
    GroupPoint x = parse_group_point_json(in, f);
    return algebra_to_json(algebra_closure(x), x.group());
  }
  if (command == "centralizer") {
    GroupPoint x = parse_group_point_json(in, f);
    AlgebraData a = algebra_closure(x);
    Json basis = Json::array();
    for (const auto& m : a.commutant_basis) basis.push_back(matrix_to_json(m));
    Json out;
    out["commutant_dim"] = a.commutant_dim;
    out["stabilizer_dim"] = a.commutant_dim - (x.group() == Group::SL ? 1 : 0);
    out["basis"] = std::move(basis);
    return out;
  }
  if (command == "destab") {
    GroupPoint x = parse_group_point_json(in, f);
    auto w = destabilize(x, opt.seed);
    Json out;
    out["witness"] = w ? witness_to_json(*w) : Json(nullptr);
    return out;
  }
  if (command == "hm-check") {
    GroupPoint x = parse_group_point_json(in, f);
    return hm_to_json(hm_crosscheck(x, opt.bound, opt.seed));
  }
  if (command == "limit") {
    check_keys_top(in, {"point", "cochar"});
    if (!in.contains("point") || !in.contains("cochar"))
      fail(Errc::MissingKey, "limit needs 'point' and 'cochar'", "input");
    GroupPoint x = parse_group_point_json(in["point"], f, "point");
    Cochar lambda = parse_cochar_json(in["cochar"], f, x.n());
    auto lim = limit_tuple(lambda, x);
    Json out;
    out["exists"] = lim.has_value();
    out["limit"] = lim ? group_point_to_json(*lim) : Json(nullptr);
    return out;
  }
  if (command == "mu") {
    check_keys_top(in, {"matrix", "cochar"});
    if (!in.contains("matrix") || !in.contains("cochar"))
      fail(Errc::MissingKey, "mu needs 'matrix' and 'cochar'", "input");
    Matrix v = parse_matrix_json(in["matrix"], f, "matrix");
    Cochar lambda = parse_cochar_json(in["cochar"], f, v.n());
    long long value = mu(lambda, v);
    auto decomp = weight_decomp(lambda, v);
    Json parts = Json::array();
    for (const auto& p : decomp.parts)
      parts.push_back(Json{{"weight", p.weight}, {"component", matrix_to_json(p.component)}});
    Json out;
    out["mu"] = value;
    out["limit_exists"] = limit_conj(lambda, v).has_value();
    out["decomposition"] = std::move(parts);
    return out;
  }
  if (command == "orbit-member") {
    check_keys_top(in, {"x", "y"});
    if (!in.contains("x") || !in.contains("y"))
      fail(Errc::MissingKey, "orbit-member needs 'x' and 'y'", "input");
    GroupPoint x = parse_group_point_json(in["x"], f, "x");
    GroupPoint y = parse_group_point_json(in["y"], f, "y");
    return orbit_to_json(orbit_member(x, y, opt.seed));
  }
  if (command == "h-approx") {
    check_keys_top(in, {"point", "conjugators", "members"});
    if (!in.contains("point")) fail(Errc::MissingKey, "h-approx needs 'point'", "input");
    GroupPoint x = parse_group_point_json(in["point"], f, "point");
    std::vector<Matrix> conj, members;
    if (in.contains("conjugators"))
      for (size_t i = 0; i < in["conjugators"].size(); ++i)
        conj.push_back(parse_matrix_json(in["conjugators"][i], f,
                                         "conjugators[" + std::to_string(i) + "]"));
    if (in.contains("members"))
      for (size_t i = 0; i < in["members"].size(); ++i)
        members.push_back(
            parse_matrix_json(in["members"][i], f, "members[" + std::to_string(i) + "]"));
    return happrox_to_json(h_approx(x, opt.bound, conj, members));
  }
  if (command == "check-rep") {
    check_keys_top(in, {"presentation", "images"});
    if (!in.contains("presentation") || !in.contains("images"))
      fail(Errc::MissingKey, "check-rep needs 'presentation' and 'images'", "input");
    RepPresentation pres = parse_presentation_json(in["presentation"]);
    GroupPoint images = parse_group_point_json(in["images"], f, "images");
    return rep_report_to_json(classify_rep(pres, images, opt.seed));
  }
  fail(Errc::BadValue, "unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability classification of matrix tuples under simultaneous conjugation"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> commands = {"classify", "limit",  "mu",        "algebra",
                                             "centralizer", "orbit-member", "destab",
                                             "hm-check", "h-approx", "check-rep", "corpus"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", opt.input, "input JSON file (default: standard input)");
    sub->add_option("--bound", opt.bound, "weight bound for sampling operations");
    sub->add_option("--seed", opt.seed, "seed for randomized fallbacks");
    sub->add_option("--field", opt.field, "coefficient field: Q or QI");
    sub->add_option("--format", opt.format, "output format (json)");
  }

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (opt.format != "json") pstab::fail(pstab::Errc::BadValue, "only --format json is supported");
    int exit_code = 0;
    Json out = dispatch(command, opt, exit_code);
    std::cout << out.dump(2) << "\n";
    return exit_code;
  } catch (const pstab::Error& e) {
    if (e.code() == pstab::Errc::Internal) {
      Json err;
      err["error"] = std::string(e.code_name());
      err["message"] = e.what();
      std::cout << err.dump(2) << "\n";
      return 1;
    }
    Json err;
    err["error"] = std::string(e.code_name());
    err["message"] = e.what();
    if (!e.where().empty()) err["where"] = e.where();
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "INTERNAL";
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
