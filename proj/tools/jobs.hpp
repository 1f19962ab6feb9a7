#pragma once

// Batch jobs behind affeis_cli: a parsed JobSpec runs to a JSON or CSV artifact.

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace affeis::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitNumeric = 4 };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string command;
  std::string target;  // the swept command, for sweep only
  std::string type = "A";
  int rank = 1;
  // numeric and list parameters exactly as given on the command line
  std::map<std::string, std::string> params;
  std::vector<std::string> flags;
  std::string output = "json";
  std::string output_path;  // empty: stdout

  nlohmann::ordered_json to_json() const;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Artifact {
  nlohmann::ordered_json result;
  Table table;
};

const std::vector<std::string>& commands();

// Throws ParseError for malformed parameters and affeis::Error for failed preconditions.
Artifact run_job(const JobSpec& job);

// The file contents for an artifact.
std::string render(const JobSpec& job, const Artifact& art);

JobSpec parse_args(int argc, const char* const* argv);

// Parse, run and write; returns the exit code. Errors go to `err` as one JSON line.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string format_double(double x);

}  // namespace affeis::cli
