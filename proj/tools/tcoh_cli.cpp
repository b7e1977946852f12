#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcoh/tcoh.h"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"Exact homological computations for tensor algebras and preprojective algebras"};
  app.set_version_flag("--version", std::string(tcoh_version()));

  std::string command;
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::optional<size_t>> bounds;
  std::string field = "Q", format = "json", out;

  app.add_option("command", command,
                 "validate | resolve | tor | ext | purity | stabilize | graded-kernel | coherence | "
                 "graded-resolve | theta | preprojective | eta | lemma34")
      ->required();
  for (const char* key : {"algebra", "module", "target", "sigma", "map"})
    app.add_option(std::string("--") + key, inputs[key]);
  for (const char* key : {"cap", "max-power", "s-max", "m-max", "length", "seed", "n", "i", "samples", "max-degree",
                          "gldim-bound", "vertex"})
    app.add_option(std::string("--") + key, bounds[key]);
  app.add_option("--field", field, "Q or a prime p, for built-in algebras");
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out, "write the report here as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json req;
  req["command"] = command;
  for (const auto& [k, v] : inputs)
    if (!v.empty()) req[k] = v;
  req["bounds"] = json::object();
  for (const auto& [k, v] : bounds) {
    if (!v) continue;
    std::string key = k;
    for (auto& c : key)
      if (c == '-') c = '_';
    req["bounds"][key] = *v;
  }
  if (field == "Q") {
    req["field"] = "Q";
  } else {
    try {
      req["field"] = {{"Fp", std::stoull(field)}};
    } catch (const std::exception&) {
      std::cerr << "--field: expected Q or a prime\n";
      return 2;
    }
  }
  req["format"] = format;
  if (!out.empty()) req["out"] = out;

  char* report = nullptr;
  int exit_code = 0;
  if (tcoh_run_command(req.dump().c_str(), &report, &exit_code) != TCOH_OK) {
    std::cerr << "error: " << tcoh_last_error() << "\n";
    return 3;
  }
  std::fputs(report, stdout);
  tcoh_string_free(report);
  return exit_code;
}
