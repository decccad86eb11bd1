#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arraycode/errors.hpp"
#include "arraycode/shardio.hpp"

namespace {

std::optional<std::vector<int>> parse_g(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw arraycode::ParameterError("bad --g entry '" + item + "'");
    g.push_back(value);
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace arraycode;
  CLI::App app{"EVENODD/RDP array-code shard tool"};
  app.require_subcommand(1);

  std::string family = "evenodd";
  int p = 0;
  int k = 0;
  int r = 0;
  std::string g;
  bool mds = false;
  std::string input;
  std::string out_dir;
  auto* encode = app.add_subcommand("encode", "split a file into k+r shard files");
  encode->add_option("--family", family, "evenodd or rdp")->capture_default_str();
  encode->add_option("--p", p, "odd modulus p")->required();
  encode->add_option("--k", k, "information columns")->required();
  encode->add_option("--r", r, "parity columns")->required();
  encode->add_option("--g", g, "comma-separated exponent tuple (default 0,1,2,...)");
  encode->add_flag("--mds", mds, "enforce the MDS-mode parameter constraints");
  encode->add_option("--input", input, "file to encode")->required();
  encode->add_option("--out-dir", out_dir, "directory for shard files")->required();

  std::string dir;
  std::vector<int> cols;
  auto* erase = app.add_subcommand("erase", "delete shard files to simulate failed disks");
  erase->add_option("--out-dir", dir, "shard directory")->required();
  erase->add_option("--cols", cols, "columns to delete")->required()->delimiter(',');

  std::string output;
  bool repair = false;
  auto* decode = app.add_subcommand("decode", "rebuild the file from the surviving shards");
  decode->add_option("--out-dir", dir, "shard directory")->required();
  decode->add_option("--output", output, "reconstructed file")->required();
  decode->add_flag("--repair", repair, "rewrite the missing shard files");

  auto* verify = app.add_subcommand("verify", "recompute parity shards and report mismatches");
  verify->add_option("--out-dir", dir, "shard directory")->required();

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "measured and predicted decoding XOR counts");
  bench->add_flag("--json", bench_opt.json, "emit a JSON report");
  bench->add_option("--p-min", bench_opt.p_min)->capture_default_str();
  bench->add_option("--p-max", bench_opt.p_max)->capture_default_str();
  bench->add_option("--trials", bench_opt.trials)->capture_default_str();
  bench->add_option("--seed", bench_opt.seed)->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(kExitParameter);
  }

  if (encode->parsed()) {
    EncodeOptions opt;
    try {
      opt.family = parse_family(family);
      opt.g = parse_g(g);
    } catch (const std::exception& e) {
      std::cerr << "error: code=" << kExitParameter << " kind=parameter message=" << e.what() << '\n';
      return kExitParameter;
    }
    opt.p = p;
    opt.k = k;
    opt.r = r;
    opt.mds_mode = mds;
    opt.input = input;
    opt.out_dir = out_dir;
    return cli_encode(opt, std::cout, std::cerr);
  }
  if (erase->parsed()) return cli_erase(dir, cols, std::cout, std::cerr);
  if (decode->parsed()) return cli_decode(dir, output, repair, std::cout, std::cerr);
  if (verify->parsed()) return cli_verify(dir, std::cout, std::cerr);
  if (bench->parsed()) return cli_bench(bench_opt, std::cout, std::cerr);
  if (selftest->parsed()) return cli_selftest(std::cout, std::cerr);
  return kExitParameter;
}
