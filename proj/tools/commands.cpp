#include "commands.hpp"

#include <chrono>
#include <exception>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "gradreveal/cracker.hpp"
#include "gradreveal/error.hpp"
#include "gradreveal/market.hpp"
#include "gradreveal/protocol.hpp"
#include "gradreveal/report.hpp"
#include "gradreveal/serialize.hpp"
#include "run_config.hpp"

namespace gradreveal::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kBulletinFile = "bulletin.json";
constexpr const char* kSecretFile = "secret.json";
constexpr const char* kCodesFile = "codes.csv";
constexpr const char* kTimelineFile = "timeline.csv";
constexpr const char* kSummaryFile = "summary.csv";

fs::path out_dir(const Options& options, const RunConfig* run = nullptr) {
  if (options.out) return *options.out;
  if (run) return run->output_dir;
  return ".";
}

fs::path bulletin_path(const Options& options) {
  if (options.bulletin) return *options.bulletin;
  return out_dir(options) / kBulletinFile;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string());
}

RunConfig resolve_run(const Options& options) {
  RunConfig run = load_run_config(options.config);
  if (options.seed) run.seed = *options.seed;
  return run;
}

RandomStream make_rng(const Options& options, const RunConfig& run) {
  return options.entropy ? RandomStream::os_entropy() : RandomStream::seeded(run.seed);
}

// Runs a command body, mapping library errors onto exit status 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

std::string codes_csv(const ProtocolConfig& config) {
  std::ostringstream csv;
  csv << "code,label\n";
  for (unsigned i = 0; i < config.num_codes; ++i) {
    csv << i << ',' << config.code_labels[i] << '\n';
  }
  return csv.str();
}

const char* mark(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

int cmd_setup(const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig run = resolve_run(options);
    const fs::path dir = out_dir(options, &run);
    auto rng = make_rng(options, run);
    const auto [secret, bulletin] = setup(run.protocol, rng);

    ensure_dir(dir);
    FileTransaction files;
    files.stage(dir / kSecretFile, secret_to_json(secret), FileMode::OwnerOnly);
    files.stage(dir / kBulletinFile, bulletin_to_json(bulletin));
    files.stage(dir / kCodesFile, codes_csv(run.protocol));
    files.commit();

    out << "n = " << bulletin.n << "\n";
    out << "n has " << bulletin.n.digit_count() << " digits; " << run.protocol.days
        << " daily reveals scheduled\n";
    out << "code list: " << (dir / kCodesFile).string() << "\n";
    out << "bulletin: " << (dir / kBulletinFile).string() << "\n";
    out << "secret (owner-only): " << (dir / kSecretFile).string() << "\n";
    return kExitOk;
  });
}

int cmd_reveal(const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const fs::path dir = out_dir(options);
    Bulletin bulletin = bulletin_from_json(read_file(dir / kBulletinFile));
    const Secret secret = secret_from_json(read_file(dir / kSecretFile));
    check_secret(bulletin.config, secret);
    if (compose(secret.p, secret.q) != bulletin.n) {
      throw Error(ErrorCode::InvalidConfig, "secret does not match the published n");
    }
    if (options.count < 1) throw Error(ErrorCode::InvalidConfig, "--count must be >= 1");
    if (bulletin.complete()) {
      throw Error(ErrorCode::ProtocolComplete, "all digits have already been revealed");
    }
    if (options.count > bulletin.remaining()) {
      throw Error(ErrorCode::ProtocolComplete,
                  "only " + std::to_string(bulletin.remaining()) + " digits remain");
    }

    const std::size_t before = bulletin.day();
    for (std::size_t i = 0; i < options.count; ++i) bulletin = reveal_next(secret, bulletin);
    write_file_atomic(dir / kBulletinFile, bulletin_to_json(bulletin));

    out << "revealed: " << bulletin.revealed.substr(before) << "\n";
    out << "day " << bulletin.day() << " of " << bulletin.config.days << "; "
        << bulletin.remaining() << " remaining\n";
    return kExitOk;
  });
}

int cmd_crack(const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bulletin bulletin = bulletin_from_json(read_file(bulletin_path(options)));
    const CrackBudget budget{options.budget.value_or(kDefaultCrackBudget)};

    const auto start = std::chrono::steady_clock::now();
    const CrackResult result = crack(bulletin, budget);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    out << crack_report_to_json(result, elapsed.count());
    switch (result.outcome) {
      case CrackOutcome::Found: return static_cast<int>(kExitOk);
      case CrackOutcome::BudgetExceeded: return static_cast<int>(kExitBudgetExceeded);
      case CrackOutcome::NotFound: return static_cast<int>(kExitNotFound);
    }
    return static_cast<int>(kExitError);
  });
}

int cmd_verify(const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bulletin bulletin = bulletin_from_json(read_file(bulletin_path(options)));
    const VerificationReport report = verify(bulletin);

    out << "p is prime:            " << mark(report.p_is_prime) << "\n";
    out << "p divides n:           " << mark(report.p_divides_n) << "\n";
    out << "cofactor prime, sized: " << mark(report.cofactor_valid) << "\n";
    out << "winner code listed:    " << mark(report.winner_listed) << "\n";
    if (report.payout) {
      out << "payout: $" << report.payout->amount << " to code " << report.payout->winner.value
          << " (" << report.payout->label << ")\n";
      return static_cast<int>(kExitOk);
    }
    out << "verification FAILED; no payout\n";
    return static_cast<int>(kExitVerifyFailed);
  });
}

int cmd_simulate(const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig run = resolve_run(options);
    const fs::path dir = out_dir(options, &run);
    auto rng = make_rng(options, run);
    const auto caps = run.base_caps();
    const SimulationReport report = run_simulation(run.protocol, run.agents, caps, rng);

    std::ostringstream timeline;
    std::ostringstream summary;
    write_timeline_csv(timeline, report);
    write_summary_csv(summary, report);

    ensure_dir(dir);
    FileTransaction files;
    files.stage(dir / kTimelineFile, timeline.str());
    files.stage(dir / kSummaryFile, summary.str());
    files.commit();

    out << "jumpDay = " << report.jump_day << " of " << run.protocol.days << "\n";
    for (const auto& agent : report.crack_days) {
      out << "  " << agent.name << ": ";
      if (agent.day) {
        out << "cracked on day " << *agent.day << "\n";
      } else {
        out << "never cracked\n";
      }
    }
    out << "verification " << (report.verification.passed() ? "passed" : "FAILED") << "\n";
    out << "wrote " << (dir / kTimelineFile).string() << " and "
        << (dir / kSummaryFile).string() << "\n";
    return report.verification.passed() ? static_cast<int>(kExitOk)
                                        : static_cast<int>(kExitVerifyFailed);
  });
}

}  // namespace gradreveal::cli
