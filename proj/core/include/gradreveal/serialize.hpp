#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gradreveal/cracker.hpp"
#include "gradreveal/protocol.hpp"

namespace gradreveal {

// JSON forms of the protocol files. Big integers are decimal strings and the
// reveal log is a string of digit characters. Parsing validates the same
// invariants the types carry and throws ParseError otherwise.

std::string bulletin_to_json(const Bulletin& bulletin);
Bulletin bulletin_from_json(const std::string& text);

std::string secret_to_json(const Secret& secret);
Secret secret_from_json(const std::string& text);

std::string config_to_json(const ProtocolConfig& config);
ProtocolConfig config_from_json(const std::string& text);

std::string crack_report_to_json(const CrackResult& result, double elapsed_seconds);

enum class FileMode { Public, OwnerOnly };

/// Stages several files as temps and moves them into place together on
/// commit(). Temps left uncommitted are removed on destruction, so a failed
/// command leaves the target directory as it found it.
class FileTransaction {
 public:
  FileTransaction() = default;
  FileTransaction(const FileTransaction&) = delete;
  FileTransaction& operator=(const FileTransaction&) = delete;
  ~FileTransaction();

  void stage(const std::filesystem::path& path, const std::string& contents,
             FileMode mode = FileMode::Public);
  void commit();

 private:
  struct Staged {
    std::filesystem::path temp;
    std::filesystem::path target;
  };
  std::vector<Staged> staged_;
};

/// Writes to a sibling temp file and renames it into place, so readers see
/// either the old contents or the new ones. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents,
                       FileMode mode = FileMode::Public);

std::string read_file(const std::filesystem::path& path);

}  // namespace gradreveal
