#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "turan/report.hpp"

namespace turan {

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

// Written next to every --out file. Replaying `args` must give an output
// with the same sha256; the timestamp is the only field allowed to differ.
struct RunManifest {
    std::string command;
    std::vector<std::string> args;
    std::string code_version;
    std::string timestamp;
    std::map<std::string, std::string> input_hashes;
    std::string output_path;
    std::string output_sha256;
};

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);
std::string utc_timestamp();

}  // namespace turan
