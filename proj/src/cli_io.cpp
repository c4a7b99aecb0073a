// Copyright 2026 The Translucent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
////////////////////////////////////////////////////////////////////////////////

#include "translucent/cli_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "translucent/error.hpp"
#include "translucent/hash.hpp"

namespace translucent {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDigestBytes = 8;

[[noreturn]] void parse_error(const std::string& why) {
  throw Error(ErrorCode::kParseError, why);
}

[[noreturn]] void validation_error(const std::string& why) {
  throw Error(ErrorCode::kValidationError, why);
}

std::string digest_hex(std::string_view body) {
  static constexpr char kHex[] = "0123456789abcdef";
  const Digest256 d = sha256(body);
  std::string out;
  for (std::size_t i = 0; i < kDigestBytes; ++i) {
    out.push_back(kHex[d[i] >> 4]);
    out.push_back(kHex[d[i] & 0xF]);
  }
  return out;
}

std::string hex(const BigNat& n) { return n.to_hex(); }
std::string hex(const GroupElement& e) { return e.residue().to_hex(); }

Json header(RecordKind kind) {
  Json j;
  j["kind"] = record_kind_name(kind);
  j["version"] = kFormatVersion;
  return j;
}

Json to_json(const GlobalParams& r) {
  Json j = header(RecordKind::kGlobal);
  if (r.preset) j["preset"] = *r.preset;
  j["rho"] = hex(r.rho);
  j["g"] = hex(r.g);
  j["U"] = hex(r.u);
  j["seed"] = r.seed;
  return j;
}

Json to_json(const EscrowParams& r) {
  Json j = header(RecordKind::kEscrowPublic);
  j["rho"] = r.chain.empty() ? "0" : hex(r.chain.front().modulus());
  j["t"] = r.t();
  j["epoch"] = r.epoch;
  Json v = Json::array();
  for (const GroupElement& e : r.chain) v.push_back(hex(e));
  j["V"] = std::move(v);
  return j;
}

Json to_json(const EscrowSecret& r) {
  Json j = header(RecordKind::kEscrowSecret);
  j["rho"] = hex(r.rho);
  j["t"] = r.t;
  j["epoch"] = r.epoch;
  j["ell"] = r.ell;
  j["x_L"] = hex(r.x_l);
  return j;
}

Json to_json(const RecipientPublicKey& r) {
  Json j = header(RecordKind::kRecipientPublic);
  j["rho"] = hex(r.y.modulus());
  j["y_B"] = hex(r.y);
  return j;
}

Json to_json(const RecipientKeypair& r) {
  Json j = header(RecordKind::kRecipientSecret);
  j["rho"] = hex(r.y.modulus());
  j["x_B"] = hex(r.x);
  j["y_B"] = hex(r.y);
  return j;
}

Json to_json(const Ciphertext& r) {
  Json j = header(RecordKind::kCiphertext);
  j["rho"] = hex(r.c1.modulus());
  j["c1"] = hex(r.c1);
  j["c2"] = hex(r.c2);
  j["c3"] = hex(r.c3);
  j["i"] = r.i;
  return j;
}

// Field access with strict typing. Every accessor reports ParseError for
// missing or mistyped fields; range violations are left to the builders.
class Fields {
 public:
  explicit Fields(const Json& j) : j_(j) {}

  void expect_keys(std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
    for (std::string_view key : required) {
      if (!j_.contains(key)) parse_error("missing field '" + std::string(key) + "'");
    }
    for (const auto& [key, value] : j_.items()) {
      const bool known =
          key == "kind" || key == "version" || key == "digest" ||
          std::find(required.begin(), required.end(), key) != required.end() ||
          std::find(optional.begin(), optional.end(), key) != optional.end();
      if (!known) parse_error("unexpected field '" + key + "'");
    }
  }

  bool has(std::string_view key) const { return j_.contains(key); }

  std::string string(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_string()) parse_error("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
  }

  BigNat nat(std::string_view key) const {
    return BigNat::from_canonical_hex(string(key));
  }

  std::uint64_t u64(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_number_unsigned()) {
      parse_error("field '" + std::string(key) + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  std::uint32_t u32(std::string_view key) const {
    const std::uint64_t v = u64(key);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      validation_error("field '" + std::string(key) + "' out of range");
    }
    return static_cast<std::uint32_t>(v);
  }

  std::vector<BigNat> nat_list(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_array()) parse_error("field '" + std::string(key) + "' must be a list");
    std::vector<BigNat> out;
    for (const Json& item : v) {
      if (!item.is_string()) parse_error("field '" + std::string(key) + "' must hold strings");
      out.push_back(BigNat::from_canonical_hex(item.get<std::string>()));
    }
    return out;
  }

 private:
  const Json& at(std::string_view key) const {
    const auto it = j_.find(key);
    if (it == j_.end()) parse_error("missing field '" + std::string(key) + "'");
    return *it;
  }

  const Json& j_;
};

BigNat group_modulus(const Fields& f) {
  BigNat rho = f.nat("rho");
  if (rho < BigNat(5) || !is_probable_prime(rho)) {
    validation_error("rho is not a prime >= 5");
  }
  return rho;
}

void require_exponent(const BigNat& x, const BigNat& rho, const char* name) {
  if (x.is_zero() || x > rho - BigNat(2)) {
    validation_error(std::string(name) + " outside [1, rho - 2]");
  }
}

Record build(RecordKind kind, Fields& f) {
  switch (kind) {
    case RecordKind::kGlobal: {
      f.expect_keys({"rho", "g", "U", "seed"}, {"preset"});
      const BigNat rho = f.nat("rho");
      GlobalParams global{rho, GroupElement(f.nat("g"), rho),
                          GroupElement(f.nat("U"), rho), f.string("seed"),
                          std::nullopt};
      if (f.has("preset")) global.preset = f.string("preset");
      check_global_params(global);
      return global;
    }
    case RecordKind::kEscrowPublic: {
      f.expect_keys({"rho", "t", "epoch", "V"});
      const BigNat rho = group_modulus(f);
      const std::uint32_t t = f.u32("t");
      const std::vector<BigNat> v = f.nat_list("V");
      if (t == 0 || v.size() != t) validation_error("V must hold exactly t >= 1 elements");
      EscrowParams params;
      params.epoch = f.u64("epoch");
      for (const BigNat& e : v) params.chain.emplace_back(e, rho);
      return params;
    }
    case RecordKind::kEscrowSecret: {
      f.expect_keys({"rho", "t", "epoch", "ell", "x_L"});
      EscrowSecret secret{group_modulus(f), f.nat("x_L"), f.u32("ell"),
                          f.u32("t"), f.u64("epoch")};
      if (secret.t == 0 || secret.ell == 0 || secret.ell > secret.t) {
        validation_error("ell outside [1, t]");
      }
      require_exponent(secret.x_l, secret.rho, "x_L");
      return secret;
    }
    case RecordKind::kRecipientPublic: {
      f.expect_keys({"rho", "y_B"});
      const BigNat rho = group_modulus(f);
      return RecipientPublicKey{GroupElement(f.nat("y_B"), rho)};
    }
    case RecordKind::kRecipientSecret: {
      f.expect_keys({"rho", "x_B", "y_B"});
      const BigNat rho = group_modulus(f);
      RecipientKeypair keys{f.nat("x_B"), GroupElement(f.nat("y_B"), rho)};
      require_exponent(keys.x, rho, "x_B");
      return keys;
    }
    case RecordKind::kCiphertext: {
      f.expect_keys({"rho", "c1", "c2", "c3", "i"});
      const BigNat rho = group_modulus(f);
      Ciphertext ct{GroupElement(f.nat("c1"), rho),
                    GroupElement(f.nat("c2"), rho),
                    GroupElement(f.nat("c3"), rho), f.u32("i")};
      if (ct.i == 0) validation_error("index must be >= 1");
      return ct;
    }
  }
  parse_error("unknown record kind");
}

RecordKind parse_kind(const std::string& name) {
  for (RecordKind k : {RecordKind::kGlobal, RecordKind::kEscrowPublic,
                       RecordKind::kEscrowSecret, RecordKind::kRecipientPublic,
                       RecordKind::kRecipientSecret, RecordKind::kCiphertext}) {
    if (record_kind_name(k) == name) return k;
  }
  parse_error("unknown record kind '" + name + "'");
}

std::string csv_line(const SummaryRow& row) {
  std::string out = std::to_string(row.epoch) + "," +
                    std::to_string(row.sessions) + "," +
                    std::to_string(row.attempted) + "," +
                    std::to_string(row.correct) + "," +
                    format_rate_fixed4(row.attempted, row.sessions) + "," +
                    format_rate_fixed4(row.correct, row.sessions) + ",";
  if (row.inferred_index) out += std::to_string(*row.inferred_index);
  return out;
}

}  // namespace

std::string_view record_kind_name(RecordKind kind) {
  switch (kind) {
    case RecordKind::kGlobal: return "global";
    case RecordKind::kEscrowPublic: return "escrow-public";
    case RecordKind::kEscrowSecret: return "escrow-secret";
    case RecordKind::kRecipientPublic: return "recipient-public";
    case RecordKind::kRecipientSecret: return "recipient-secret";
    case RecordKind::kCiphertext: return "ciphertext";
  }
  return "";
}

RecordKind record_kind(const Record& record) {
  return static_cast<RecordKind>(record.index());
}

std::string encode_record(const Record& record) {
  Json j = std::visit([](const auto& r) { return to_json(r); }, record);
  const std::string body = j.dump();
  j["digest"] = digest_hex(body);
  return j.dump() + "\n";
}

Record decode_record(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) parse_error("record must be a JSON object");
  Fields fields(j);
  const RecordKind kind = parse_kind(fields.string("kind"));
  const Json& version = j.contains("version") ? j["version"] : Json();
  if (!version.is_number_integer()) parse_error("missing or mistyped version");
  if (version.get<std::int64_t>() != kFormatVersion) {
    throw Error(ErrorCode::kVersionError,
                "unsupported format version " + version.dump());
  }
  const std::string digest = fields.string("digest");

  Record record = [&]() -> Record {
    try {
      return build(kind, fields);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParseError ||
          e.code() == ErrorCode::kValidationError) {
        throw;
      }
      throw Error(ErrorCode::kValidationError, e.what());
    }
  }();

  Json body = j;
  body.erase("digest");
  if (digest != digest_hex(body.dump())) {
    validation_error("digest mismatch: record was modified or corrupted");
  }
  return record;
}

std::string format_rate_fixed4(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "0.0000";
  const BigNat scaled = BigNat(num) * BigNat(10000);
  const BigNat d(den);
  BigNat q = scaled / d;
  const BigNat twice = (scaled % d) * BigNat(2);
  if (twice > d || (twice == d && q.is_odd())) q = q + BigNat(1);
  const std::uint64_t whole = *(q / BigNat(10000)).to_u64();
  const std::uint64_t frac = *(q % BigNat(10000)).to_u64();
  std::string frac_str = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(4 - frac_str.size(), '0') +
         frac_str;
}

std::string emit_report_csv(const SimReport& report) {
  std::string out =
      "epoch,sessions,attempted,correct,believed_rate,actual_rate,"
      "inferred_index\n";
  for (const SummaryRow& row : summarize(report)) {
    out += csv_line(row);
    out += '\n';
  }
  return out;
}

std::string emit_report_csv(const SimReport& report,
                            const std::filesystem::path& destination) {
  std::string csv = emit_report_csv(report);
  write_text_file_atomic(destination, csv);
  return csv;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path,
                            std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot create " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::kIoError,
                "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace translucent
