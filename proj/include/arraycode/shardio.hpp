#pragma once

// Shard files (one per column) and the command implementations behind the
// arraycode CLI.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arraycode/codes.hpp"

namespace arraycode {

inline constexpr char kShardMagic[6] = {'A', 'R', 'R', 'C', 'D', '1'};
inline constexpr std::uint8_t kShardVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParameter = 2,
  kExitUnrecoverable = 3,
  kExitFormat = 4,
};

struct ShardHeader {
  CodeParams params;
  std::uint32_t column_index = 0;
  std::uint64_t stripe_count = 0;
  std::uint64_t payload_byte_len = 0;
  std::uint64_t original_file_len = 0;
};

std::size_t column_bytes(int p);
std::size_t header_size(const CodeParams& params);

void write_header(std::ostream& out, const ShardHeader& h);
// Throws FormatError on bad magic, version, family or truncated input.
ShardHeader read_header(std::istream& in);

// Packs rows 0..p-2 LSB-first; unpack rejects nonzero padding bits.
void pack_column(const RingPoly& column, std::uint8_t* out);
RingPoly unpack_column(const std::uint8_t* in, int p);

struct SplitFile {
  // Per stripe, k information columns.
  std::vector<std::vector<RingPoly>> stripes;
  std::uint64_t original_len = 0;
};

// Fills each (p-1) x k stripe row by row, bits LSB-first within a byte; the
// last stripe is zero padded.
SplitFile split_file(const std::vector<std::uint8_t>& bytes, const CodeParams& params);
std::vector<std::uint8_t> join_stripes(const std::vector<std::vector<RingPoly>>& stripes,
                                       const CodeParams& params, std::uint64_t original_len);

std::filesystem::path shard_path(const std::filesystem::path& dir, int column);

struct ShardSet {
  CodeParams params;
  std::uint64_t stripe_count = 0;
  std::optional<std::uint64_t> original_file_len;
  // payloads[c] empty when column c is missing.
  std::vector<std::vector<std::uint8_t>> payloads;
  std::vector<int> missing;
};

void write_shard(const std::filesystem::path& path, const ShardHeader& h,
                 const std::vector<std::uint8_t>& payload);
// Reads every shard file in dir and checks that the headers agree.
ShardSet read_shard_set(const std::filesystem::path& dir);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

// Encodes file bytes into payloads for all k+r columns.
std::vector<std::vector<std::uint8_t>> encode_payloads(const CodeParams& params,
                                                       const std::vector<std::uint8_t>& bytes,
                                                       std::uint64_t& stripe_count);

struct DecodeResult {
  std::vector<std::uint8_t> file;
  // Payloads of every column, including the recovered ones.
  std::vector<std::vector<std::uint8_t>> payloads;
  std::uint64_t xor_count = 0;
  bool used_fallback = false;
};

DecodeResult decode_shard_set(const ShardSet& set);

struct EncodeOptions {
  Family family = Family::Evenodd;
  int p = 0;
  int k = 0;
  int r = 0;
  std::optional<std::vector<int>> g;
  bool mds_mode = false;
  std::filesystem::path input;
  std::filesystem::path out_dir;
};

struct BenchOptions {
  bool json = false;
  int p_min = 5;
  int p_max = 59;
  int trials = 20;
  std::uint64_t seed = 1;
};

// Command bodies return an exit code and print a machine-parsable
// "error: code=<n> kind=<kind> message=<text>" line to err on failure.
int cli_encode(const EncodeOptions& opt, std::ostream& out, std::ostream& err);
int cli_erase(const std::filesystem::path& dir, const std::vector<int>& cols, std::ostream& out,
              std::ostream& err);
int cli_decode(const std::filesystem::path& dir, const std::filesystem::path& output, bool repair,
               std::ostream& out, std::ostream& err);
int cli_verify(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);
int cli_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
int cli_selftest(std::ostream& out, std::ostream& err);

}  // namespace arraycode
