#ifndef HYPERHALL_IO_CATALOGUE_HPP
#define HYPERHALL_IO_CATALOGUE_HPP

// Needs httplib.h on the include path and OpenSSL's libcrypto at link time.
// Define CPPHTTPLIB_OPENSSL_SUPPORT (and link libssl) for https sources.

#include <openssl/evp.h>

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "text_format.hpp"

namespace hyperhall::io
{

inline std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorKind::InternalInconsistency, "SHA-256 computation failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

/// File name of the classification for `order`: asNN.txt.
inline std::string catalogue_file_name(int order)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "as%02d.txt", order);
    return buf;
}

struct FetchOptions
{
    std::filesystem::path cache_dir; // empty: $HYPERHALL_CACHE, else $HOME/.cache/hyperhall
    bool offline = false;            // use only the cache (and local mirrors)
    int retries = 3;
    std::chrono::milliseconds retry_delay{500};
    std::chrono::seconds timeout{20};
};

struct CatalogueResult
{
    std::vector<SchemeFile> schemes;
    std::string sha256;
    std::filesystem::path cached_file;
    bool from_cache = false;
};

namespace detail
{

inline std::filesystem::path resolve_cache_dir(const FetchOptions &opt)
{
    if (!opt.cache_dir.empty())
        return opt.cache_dir;
    if (const char *env = std::getenv("HYPERHALL_CACHE"); env && *env)
        return env;
    if (const char *home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "hyperhall";
    return std::filesystem::temp_directory_path() / "hyperhall-cache";
}

inline std::optional<std::string> read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::filesystem::path &p, std::string_view data)
{
    std::filesystem::create_directories(p.parent_path());
    std::filesystem::path tmp = p;
    tmp += ".part";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out)
            throw Error(ErrorKind::InternalInconsistency, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

inline std::filesystem::path sidecar(const std::filesystem::path &p)
{
    std::filesystem::path s = p;
    s += ".sha256";
    return s;
}

/// Checks `data` against the sidecar of `file` if one exists. Sidecars use the
/// sha256sum layout "<hex>  <name>".
inline void verify_sidecar(const std::filesystem::path &file, std::string_view data)
{
    auto expected = read_file(sidecar(file));
    if (!expected)
        return;
    std::string hex = expected->substr(0, expected->find_first_of(" \t\r\n"));
    std::string actual = sha256_hex(data);
    if (hex != actual)
        throw Error(ErrorKind::ChecksumMismatch, file.string() + ": expected " + hex + ", got " + actual);
}

inline void store(const std::filesystem::path &file, std::string_view data)
{
    write_file(file, data);
    write_file(sidecar(file), sha256_hex(data) + "  " + file.filename().string() + "\n");
}

inline bool is_url(const std::string &s)
{
    return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0;
}

inline std::string download(const std::string &url, const FetchOptions &opt)
{
    const std::size_t scheme_end = url.find("://") + 3;
    const std::size_t path_start = url.find('/', scheme_end);
    const std::string host = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt <= opt.retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(opt.retry_delay * attempt);
        try {
            httplib::Client client(host);
            client.set_connection_timeout(opt.timeout);
            client.set_read_timeout(opt.timeout);
            client.set_follow_location(true);
            auto res = client.Get(path);
            if (!res) {
                last_error = httplib::to_string(res.error());
                continue;
            }
            if (res->status == 200)
                return res->body;
            last_error = "HTTP status " + std::to_string(res->status);
            if (res->status == 404)
                break;
        } catch (const std::exception &e) {
            last_error = e.what();
        }
    }
    throw Error(ErrorKind::NetworkUnavailable, url + ": " + last_error);
}

} // namespace detail

/// Loads the classification file for `order` from `source`, either a local
/// mirror directory (file://… or a plain path) or an http(s) base URL, where
/// the file is <source>/asNN.txt. Downloads are cached with a SHA-256 sidecar
/// and the cache is used first; offline mode never touches the network.
/// Throws NetworkUnavailable, ChecksumMismatch, or UnrecognizedCatalogueFormat.
inline CatalogueResult fetch_catalogue(const std::string &source, int order, const FetchOptions &opt = {})
{
    const std::string file_name = catalogue_file_name(order);
    const std::filesystem::path cache_root = detail::resolve_cache_dir(opt);
    const std::filesystem::path cached = cache_root / sha256_hex(source).substr(0, 16) / file_name;

    CatalogueResult result;
    result.cached_file = cached;
    std::string data;
    if (!detail::is_url(source)) {
        std::string dir = source.rfind("file://", 0) == 0 ? source.substr(7) : source;
        const std::filesystem::path local = std::filesystem::path(dir) / file_name;
        auto content = detail::read_file(local);
        if (!content)
            throw Error(ErrorKind::NetworkUnavailable, "mirror has no " + local.string());
        detail::verify_sidecar(local, *content);
        data = std::move(*content);
        detail::store(cached, data);
    } else if (auto content = detail::read_file(cached)) {
        detail::verify_sidecar(cached, *content);
        data = std::move(*content);
        result.from_cache = true;
    } else {
        if (opt.offline)
            throw Error(ErrorKind::NetworkUnavailable, "offline and " + file_name + " is not cached");
        std::string base = source;
        while (!base.empty() && base.back() == '/')
            base.pop_back();
        data = detail::download(base + "/" + file_name, opt);
        detail::store(cached, data);
    }
    result.sha256 = sha256_hex(data);
    result.schemes = parse_catalogue(data);
    return result;
}

} // namespace hyperhall::io

#endif // HYPERHALL_IO_CATALOGUE_HPP
