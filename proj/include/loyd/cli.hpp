#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace loyd::cli {

enum ExitCode : int { ok = 0, internal = 1, usage = 2, schema = 3, capacity = 4, verification = 5 };

inline constexpr int schema_version = 1;

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Everything a command produces: the report plus named output files.
struct Outputs {
    nlohmann::json report;
    std::map<std::string, std::string> files;
    bool passed = true;  // false turns into the verification exit code
};

// Pure function of the manifest (and worker count, which never changes the
// bytes).  Throws SchemaError on malformed manifests.
Outputs run_manifest(const nlohmann::json& manifest, int workers = 1);

// Full command line, including argv[0].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loyd::cli
