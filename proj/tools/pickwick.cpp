#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pickwick/error.hpp"
#include "pickwick/io/fixtures.hpp"
#include "pickwick/io/schema.hpp"
#include "pickwick/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pickwick;

namespace {

struct Invocation {
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
};

// Raised for input problems detected before dispatch.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_atomic(const fs::path& target, const std::string& text) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw InputError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const std::string& out, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_atomic(out, text);
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void check_schema(const std::string& name, const json& doc) {
  const auto violations = io::validate(cli::schema_for(name), doc);
  if (violations.empty()) return;
  std::string msg = "schema violations (" + name + "):";
  for (const auto& v : violations) msg += "\n  " + (v.pointer.empty() ? std::string("/") : v.pointer) + ": " + v.message;
  throw InputError(msg);
}

json envelope(const std::string& command, const json& payload, std::optional<std::uint64_t> seed) {
  json r{{"command", command}, {"version", kVersion}, {"input", payload}};
  if (seed) r["seed"] = *seed;
  return r;
}

int fail(const std::string& out, json report, const std::string& code, const std::string& message, int exit_code) {
  std::cerr << "pickwick: " << message << "\n";
  report["status"] = exit_code == cli::kExitInfeasible ? "infeasible" : "error";
  report["error"] = {{"code", code}, {"message", message}};
  if (!out.empty() && out != "-") {
    try {
      emit(out, report);
    } catch (const std::exception&) {
    }
  }
  return exit_code;
}

int run_payload(const std::string& command, const json& payload, std::optional<std::uint64_t> seed,
                const std::string& out) {
  if (!seed && payload.is_object() && payload.contains("seed") && payload["seed"].is_number_unsigned())
    seed = payload["seed"].get<std::uint64_t>();
  json report = envelope(command, payload, seed);
  try {
    check_schema(command, payload);
    cli::Outcome o = cli::dispatch(command, payload, seed);
    report["status"] = o.exit_code == cli::kExitOk ? "ok" : "infeasible";
    report["result"] = std::move(o.result);
    emit(out, report);
    return o.exit_code;
  } catch (const Error& e) {
    const bool infeasible = e.code() == ErrorCode::NotPsd || e.code() == ErrorCode::NotCompletePick;
    return fail(out, report, std::string(to_string(e.code())), e.what(),
                infeasible ? cli::kExitInfeasible : cli::kExitError);
  } catch (const InputError& e) {
    return fail(out, report, "InvalidInput", e.what(), cli::kExitError);
  } catch (const std::exception& e) {
    return fail(out, report, "Internal", e.what(), cli::kExitError);
  }
}

json inline_norm(const std::vector<unsigned>& alpha, const std::string& space, std::optional<double> a) {
  json payload{{"series", {{"d", alpha.size()}, {"terms", json::array({{{"alpha", alpha}, {"q", "1"}}})}}},
               {"space", space}};
  if (a) payload["a"] = *a;
  return payload;
}

json inline_point(const std::vector<double>& re, const std::vector<double>& im) {
  if (!im.empty() && im.size() != re.size()) throw InputError("real and imaginary coordinate counts differ");
  json p = json::array();
  for (std::size_t i = 0; i < re.size(); ++i) p.push_back({re[i], im.empty() ? 0.0 : im[i]});
  return p;
}

json inline_kernel(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) return spec;
  const std::string family = spec.substr(0, eq);
  if (family != "hardy-sobolev") throw InputError("only hardy-sobolev takes a parameter");
  return {{"hardy-sobolev", std::stod(spec.substr(eq + 1))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drury-Arveson space computations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::map<std::string, Invocation> inv;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : cli::command_names()) {
    auto* sub = app.add_subcommand(name, cli::schema_for(name).value("description", std::string()));
    auto& i = inv[name];
    sub->add_option("--in", i.in, "payload JSON file ('-' for stdin)");
    sub->add_option("--out", i.out, "report path (stdout when omitted)");
    sub->add_option("--seed", i.seed, "seed for randomized payloads");
    subs[name] = sub;
  }

  std::vector<unsigned> alpha;
  std::string space = "da";
  std::optional<double> ha;
  subs["norm"]->add_option("--alpha", alpha, "exponents of an inline monomial")->delimiter(',');
  subs["norm"]->add_option("--space", space, "da, hardy-sobolev or bergman2");
  subs["norm"]->add_option("--a", ha, "hardy-sobolev parameter");

  std::string kernel_spec = "da";
  std::vector<double> z_re, z_im, w_re, w_im;
  subs["kernel"]->add_option("--kernel", kernel_spec, "family name, or hardy-sobolev=a");
  subs["kernel"]->add_option("--z", z_re, "real parts of z")->delimiter(',');
  subs["kernel"]->add_option("--zi", z_im, "imaginary parts of z")->delimiter(',');
  subs["kernel"]->add_option("--w", w_re, "real parts of w")->delimiter(',');
  subs["kernel"]->add_option("--wi", w_im, "imaginary parts of w")->delimiter(',');

  Invocation run_inv;
  auto* run = app.add_subcommand("run", "run a scenario file {command, payload, seed, output_path}");
  run->add_option("--in", run_inv.in, "scenario file")->required();
  run->add_option("--out", run_inv.out, "report path (overrides output_path)");
  run->add_option("--seed", run_inv.seed, "seed (overrides the scenario seed)");

  std::vector<std::string> suites;
  std::string out_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "regenerate golden files");
  fixtures->add_option("--suite", suites, "suite names (all when omitted)");
  fixtures->add_option("--out-dir", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures->parsed()) {
      if (suites.empty()) suites = io::fixture_suites();
      fs::create_directories(out_dir);
      for (const auto& s : suites) write_atomic(fs::path(out_dir) / (s + ".json"), io::fixture_emit(s));
      return cli::kExitOk;
    }
    if (run->parsed()) {
      const json scenario = read_json(run_inv.in);
      check_schema("scenario", scenario);
      std::optional<std::uint64_t> seed = run_inv.seed;
      if (!seed && scenario.contains("seed")) seed = scenario["seed"].get<std::uint64_t>();
      std::string out = run_inv.out;
      if (out.empty()) out = scenario.value("output_path", std::string());
      return run_payload(scenario["command"].get<std::string>(), scenario["payload"], seed, out);
    }
    for (const auto& name : cli::command_names()) {
      if (!subs[name]->parsed()) continue;
      const Invocation& i = inv[name];
      json payload;
      if (!i.in.empty()) {
        payload = read_json(i.in);
      } else if (name == "norm" && !alpha.empty()) {
        payload = inline_norm(alpha, space, ha);
      } else if (name == "kernel" && !z_re.empty()) {
        payload = {{"kernel", inline_kernel(kernel_spec)}, {"z", inline_point(z_re, z_im)}};
        if (!w_re.empty()) payload["w"] = inline_point(w_re, w_im);
      } else {
        throw InputError(name + " needs --in (or inline flags)");
      }
      return run_payload(name, payload, i.seed, i.out);
    }
  } catch (const InputError& e) {
    std::cerr << "pickwick: " << e.what() << "\n";
    return cli::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pickwick: " << e.what() << "\n";
    return cli::kExitError;
  }
  return cli::kExitError;
}
