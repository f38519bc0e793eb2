#include <stdexcept>
#include <string>

#include "cforge/tle.hpp"

#ifdef CFORGE_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace cforge {

std::string fetch_text(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::runtime_error("unsupported URL (expected http:// or https://): " + url);
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw std::runtime_error("unsupported URL scheme: " + scheme);
  }
#ifndef CFORGE_HAVE_OPENSSL
  if (scheme == "https") {
    throw std::runtime_error("built without TLS support; use http:// or rebuild with OpenSSL");
  }
#endif
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string base =
      path_start == std::string::npos ? url : url.substr(0, path_start);
  const std::string path =
      path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(base);
  client.set_follow_location(true);
  client.set_connection_timeout(30);
  client.set_read_timeout(60);
  const httplib::Result res = client.Get(path);
  if (!res) {
    throw std::runtime_error("request failed for " + url + ": " +
                             httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw std::runtime_error("request for " + url + " returned status " +
                             std::to_string(res->status));
  }
  return res->body;
}

}  // namespace cforge
