#include "turan/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace turan {

namespace {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 init failed");
    }
    void update(const void* data, std::size_t n) {
        if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw std::runtime_error("sha256 update failed");
    }
    std::string hex() {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx_.get(), md, &len) != 1) throw std::runtime_error("sha256 final failed");
        std::ostringstream os;
        for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
        return os.str();
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view data) {
    Sha256 h;
    h.update(data.data(), data.size());
    return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    Sha256 h;
    char buf[1 << 14];
    while (in) {
        in.read(buf, sizeof buf);
        h.update(buf, static_cast<std::size_t>(in.gcount()));
    }
    return h.hex();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Json to_json(const RunManifest& m) {
    Json hashes = Json::object();
    for (const auto& [k, v] : m.input_hashes) hashes[k] = v;
    return Json{{"schema", kSchemaId},
                {"kind", "manifest"},
                {"command", m.command},
                {"args", m.args},
                {"code_version", m.code_version},
                {"timestamp", m.timestamp},
                {"input_hashes", hashes},
                {"output_path", m.output_path},
                {"output_sha256", m.output_sha256}};
}

RunManifest manifest_from_json(const Json& j) {
    if (j.value("kind", "") != "manifest") throw std::invalid_argument("not a run manifest");
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.args = j.at("args").get<std::vector<std::string>>();
    m.code_version = j.at("code_version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    for (auto& [k, v] : j.at("input_hashes").items()) m.input_hashes[k] = v.get<std::string>();
    m.output_path = j.at("output_path").get<std::string>();
    m.output_sha256 = j.at("output_sha256").get<std::string>();
    return m;
}

}  // namespace turan
