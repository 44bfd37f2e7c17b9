// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#include "ceorb/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Orbit structure and tangent spaces of canonical embeddings of G/Ru(P)"};
  ceorb::cli::Request req;
  std::string preset;
  std::string command;
  std::string group;
  std::string levi;
  std::string gens;
  std::string format;
  bool crosscheck = false;

  app.add_option("command", command, "orbits | modality | finite | smooth | tangent | general | rootinfo");
  app.add_option("group", group, "group type, e.g. E8 or A3xA1");
  app.add_option("--levi", levi, "levi nodes, 1-based Bourbaki numbering with offsets: \"1,2\", \"2-4\", empty, full");
  app.add_option("--gens", gens, "generators for 'general', fundamental coordinates: \"1,0;0,1\"");
  app.add_option("--format", format, "json (default) or table");
  app.add_flag("--crosscheck", crosscheck, "also run the face classification and compare");
  app.add_option("--preset", preset, std::string("named request from the file in $") + ceorb::cli::kPresetsEnv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!preset.empty()) req = ceorb::cli::load_preset(preset);
  } catch (const ceorb::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (!command.empty()) req.command = command;
  if (!group.empty()) req.group = group;
  if (!levi.empty()) req.levi = levi;
  if (!gens.empty()) req.gens = gens;
  if (!format.empty()) req.format = format;
  if (crosscheck) req.crosscheck = true;
  if (req.command.empty()) {
    std::cerr << "error: missing command\n" << app.help();
    return 2;
  }

  const auto resp = ceorb::cli::run(req);
  std::cout << resp.out;
  std::cerr << resp.err;
  return resp.exit_code;
}
