// Batch front-end over the C interface: parses flags, invokes one of the
// engine commands and writes the resulting document to stdout or a file.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gwmirror.h"

namespace {

struct CommonArgs {
  std::string model;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool model_required) {
  auto* m = cmd->add_option("--model", args.model,
                            "model string, e.g. \"n=5;a=5\"");
  if (model_required) m->required();
  cmd->add_option("--format", args.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", args.out_path,
                  "output file (default: $GWM_OUT_DIR/<auto name> if the "
                  "variable is set, else stdout)");
}

std::string sanitized(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (c == ';' || c == ',')
      out += '_';
  }
  return out;
}

// Writes atomically: a temp file in the destination directory, then rename.
bool write_document(const CommonArgs& args, const std::string& command,
                    const std::string& doc) {
  std::string path = args.out_path;
  if (path.empty()) {
    const char* dir = std::getenv("GWM_OUT_DIR");
    if (dir && *dir)
      path = std::string(dir) + "/" + command + "-" + sanitized(args.model) +
             "." + args.format;
  }
  if (path.empty()) {
    std::cout << doc;
    return true;
  }
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) {
    std::cerr << "gwcli: cannot open " << tmp << " for writing\n";
    return false;
  }
  const bool ok = std::fwrite(doc.data(), 1, doc.size(), f) == doc.size();
  std::fclose(f);
  if (!ok || std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::cerr << "gwcli: failed to write " << path << "\n";
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

int status_exit(gwm_status st, gwm_session* s) {
  std::cerr << "gwcli: " << gwm_status_name(st);
  const char* msg = gwm_last_error(s);
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << "\n";
  switch (st) {
    case GWM_ERR_INVALID:
      return 2;
    case GWM_ERR_DOMAIN:
      return 3;
    default:
      return 4;
  }
}

bool split_pair(const std::string& s, char sep, std::string& a,
                std::string& b) {
  const size_t pos = s.find(sep);
  if (pos == std::string::npos) return false;
  a = s.substr(0, pos);
  b = s.substr(pos + 1);
  return !a.empty() && !b.empty();
}

bool parse_int(const std::string& s, int& v) {
  try {
    size_t pos = 0;
    v = std::stoi(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gwcli: exact genus-0 invariants of projective complete intersections "
      "from mirror formulas"};
  app.require_subcommand(1);

  // bps
  CommonArgs bps_args;
  std::string bps_insertions;
  int bps_dmax = 4;
  CLI::App* bps = app.add_subcommand(
      "bps", "two-point invariants and their integer counts");
  add_common(bps, bps_args, true);
  bps->add_option("--insertions", bps_insertions,
                  "hyperplane powers \"b1,b2\" with b1+b2 = dim-1")
      ->required();
  bps->add_option("--dmax", bps_dmax, "largest degree")->check(CLI::Range(1, 64));

  // descendants
  CommonArgs des_args;
  std::string des_insertions;
  int des_dmax = 3;
  CLI::App* des = app.add_subcommand(
      "descendants", "two-point descendant invariants");
  add_common(des, des_args, true);
  des->add_option("--insertions", des_insertions,
                  "\"p1:b1,p2:b2\" for psi^p H^b at each point")
      ->required();
  des->add_option("--dmax", des_dmax, "largest degree")->check(CLI::Range(1, 16));

  // open
  CommonArgs open_args;
  std::string open_what = "all", open_weights = "default";
  int open_dmax = 2;
  unsigned open_seed = 1;
  CLI::App* open = app.add_subcommand(
      "open", "disk, annulus and klein bottle invariants (graph sums)");
  add_common(open, open_args, true);
  open->add_option("--what", open_what, "disk | annulus | klein | all")
      ->check(CLI::IsMember({"disk", "annulus", "klein", "all"}));
  open->add_option("--dmax", open_dmax, "largest degree")->check(CLI::Range(1, 8));
  open->add_option("--weights", open_weights,
                   "default | random | explicit comma-separated list");
  open->add_option("--seed", open_seed, "seed for random weights");

  // verify
  CommonArgs ver_args;
  ver_args.model = "n=5;a=5";
  std::vector<std::string> ver_suites;
  std::string ver_weights = "default";
  int ver_dmax = 4, ver_qorder = 2;
  unsigned ver_seed = 1;
  CLI::App* ver = app.add_subcommand(
      "verify", "run identity suites and report pass/fail");
  add_common(ver, ver_args, false);
  ver->add_option("--suite", ver_suites,
                  "coeffs | hypergeom | equivariant | open | all (repeatable)");
  ver->add_option("--dmax", ver_dmax, "degree budget")->check(CLI::Range(1, 16));
  ver->add_option("--qorder", ver_qorder, "series order budget")
      ->check(CLI::Range(1, 8));
  ver->add_option("--weights", ver_weights,
                  "default | random | explicit comma-separated list");
  ver->add_option("--seed", ver_seed, "seed for random weights");

  CLI11_PARSE(app, argc, argv);

  const CommonArgs* common = nullptr;
  std::string command;
  if (bps->parsed()) {
    common = &bps_args;
    command = "bps";
  } else if (des->parsed()) {
    common = &des_args;
    command = "descendants";
  } else if (open->parsed()) {
    common = &open_args;
    command = "open";
  } else {
    common = &ver_args;
    command = "verify";
  }

  char errbuf[256];
  gwm_session* session = nullptr;
  gwm_status st =
      gwm_session_open(common->model.c_str(), &session, errbuf, sizeof errbuf);
  if (st != GWM_OK) {
    std::cerr << "gwcli: " << gwm_status_name(st) << ": " << errbuf << "\n";
    return 2;
  }

  char* doc = nullptr;
  int failures = 0;
  if (command == "bps") {
    std::string a, b;
    int b1 = 0, b2 = 0;
    if (!split_pair(bps_insertions, ',', a, b) || !parse_int(a, b1) ||
        !parse_int(b, b2)) {
      std::cerr << "gwcli: --insertions expects \"b1,b2\"\n";
      gwm_session_close(session);
      return 2;
    }
    st = gwm_bps(session, b1, b2, bps_dmax, bps_args.format.c_str(), &doc);
  } else if (command == "descendants") {
    std::string lhs, rhs, a, b;
    int p1 = 0, b1 = 0, p2 = 0, b2 = 0;
    bool ok = split_pair(des_insertions, ',', lhs, rhs) &&
              split_pair(lhs, ':', a, b) && parse_int(a, p1) &&
              parse_int(b, b1) && split_pair(rhs, ':', a, b) &&
              parse_int(a, p2) && parse_int(b, b2);
    if (!ok) {
      std::cerr << "gwcli: --insertions expects \"p1:b1,p2:b2\"\n";
      gwm_session_close(session);
      return 2;
    }
    st = gwm_descendants(session, p1, b1, p2, b2, des_dmax,
                         des_args.format.c_str(), &doc);
  } else if (command == "open") {
    st = gwm_open_sector(session, open_what.c_str(), open_dmax,
                         open_weights.c_str(), open_seed,
                         open_args.format.c_str(), &doc);
  } else {
    std::string suites;
    for (const std::string& s : ver_suites) {
      if (!suites.empty()) suites += ',';
      suites += s;
    }
    if (suites.empty()) suites = "all";
    st = gwm_verify(session, suites.c_str(), ver_dmax, ver_qorder,
                    ver_weights.c_str(), ver_seed, ver_args.format.c_str(),
                    &failures, &doc);
  }

  int rc = 0;
  if (st != GWM_OK) {
    rc = status_exit(st, session);
  } else {
    if (!write_document(*common, command, doc)) rc = 4;
    if (rc == 0 && command == "verify" && failures > 0) {
      std::cerr << "gwcli: " << failures << " check(s) failed\n";
      rc = 1;
    }
  }
  gwm_free(doc);
  gwm_session_close(session);
  return rc;
}
