#include "gradreveal/serialize.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "gradreveal/error.hpp"
#include "json.hpp"

namespace gradreveal {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    parse_error(std::string("missing field '") + key + "'");
  }
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

ArbInt big_field(const json& object, const char* key) {
  const auto text = field<std::string>(object, key);
  auto value = ArbInt::try_parse(text);
  if (!value) parse_error(std::string("field '") + key + "' is not a decimal integer");
  return *std::move(value);
}

json config_json(const ProtocolConfig& config) {
  return json{{"numCodes", config.num_codes},
              {"digits", config.digits},
              {"days", config.days},
              {"payout", config.payout},
              {"codeLabels", config.code_labels}};
}

ProtocolConfig config_of(const json& object) {
  ProtocolConfig config;
  config.num_codes = field<unsigned>(object, "numCodes");
  config.digits = field<std::size_t>(object, "digits");
  config.days = field<std::size_t>(object, "days");
  config.payout = field<Dollars>(object, "payout");
  config.code_labels = field<std::vector<std::string>>(object, "codeLabels");
  try {
    config.validate();
  } catch (const Error& e) {
    parse_error(std::string("config: ") + e.what());
  }
  return config;
}

}  // namespace

std::string config_to_json(const ProtocolConfig& config) {
  return config_json(config).dump(2) + "\n";
}

ProtocolConfig config_from_json(const std::string& text) {
  return config_of(parse_json(text, "config"));
}

std::string bulletin_to_json(const Bulletin& bulletin) {
  json out{{"config", config_json(bulletin.config)},
           {"n", bulletin.n.to_string()},
           {"revealed", bulletin.revealed},
           {"day", bulletin.day()}};
  return out.dump(2) + "\n";
}

Bulletin bulletin_from_json(const std::string& text) {
  const json object = parse_json(text, "bulletin");
  Bulletin bulletin;
  bulletin.config = config_of(field<json>(object, "config"));
  bulletin.n = big_field(object, "n");
  bulletin.revealed = field<std::string>(object, "revealed");
  const auto day = field<std::size_t>(object, "day");
  if (day != bulletin.revealed.size()) {
    parse_error("bulletin day " + std::to_string(day) + " disagrees with " +
                std::to_string(bulletin.revealed.size()) + " revealed digits");
  }
  if (day > bulletin.config.days) parse_error("bulletin reveals more digits than days");
  for (char c : bulletin.revealed) {
    if (c < '0' || c > '9') parse_error("reveal log holds a non-digit");
  }
  return bulletin;
}

std::string secret_to_json(const Secret& secret) {
  json out{{"w", secret.w.value}, {"p", secret.p.to_string()}, {"q", secret.q.to_string()}};
  return out.dump(2) + "\n";
}

Secret secret_from_json(const std::string& text) {
  const json object = parse_json(text, "secret");
  return Secret{Code{field<unsigned>(object, "w")}, big_field(object, "p"),
                big_field(object, "q")};
}

std::string crack_report_to_json(const CrackResult& result, double elapsed_seconds) {
  json out{{"outcome", std::string(to_string(result.outcome))},
           {"candidateCount", result.required.to_string()},
           {"testsUsed", result.tests_used},
           {"elapsedSeconds", elapsed_seconds}};
  if (result.found()) {
    out["p"] = result.p.to_string();
    out["w"] = result.w.value;
  }
  return out.dump(2) + "\n";
}

namespace {

std::filesystem::path write_temp(const std::filesystem::path& path,
                                 const std::string& contents, FileMode mode) {
  namespace fs = std::filesystem;
  fs::path temp = path;
  temp += ".tmp." + std::to_string(::getpid());

  std::error_code ec;
  std::ofstream out(temp, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + temp.string());
  if (mode == FileMode::OwnerOnly) {
    fs::permissions(temp, fs::perms::owner_read | fs::perms::owner_write,
                    fs::perm_options::replace, ec);
    if (ec) {
      out.close();
      fs::remove(temp, ec);
      throw Error(ErrorCode::IoError, "cannot restrict permissions on " + temp.string());
    }
  }
  out << contents;
  out.flush();
  if (!out) {
    out.close();
    fs::remove(temp, ec);
    throw Error(ErrorCode::IoError, "write failed for " + temp.string());
  }
  return temp;
}

}  // namespace

FileTransaction::~FileTransaction() {
  std::error_code ec;
  for (const auto& file : staged_) std::filesystem::remove(file.temp, ec);
}

void FileTransaction::stage(const std::filesystem::path& path, const std::string& contents,
                            FileMode mode) {
  staged_.push_back({write_temp(path, contents, mode), path});
}

void FileTransaction::commit() {
  for (const auto& file : staged_) {
    std::error_code ec;
    std::filesystem::rename(file.temp, file.target, ec);
    if (ec) {
      throw Error(ErrorCode::IoError,
                  "cannot move " + file.temp.string() + " to " + file.target.string());
    }
  }
  staged_.clear();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents,
                       FileMode mode) {
  FileTransaction transaction;
  transaction.stage(path, contents, mode);
  transaction.commit();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace gradreveal
