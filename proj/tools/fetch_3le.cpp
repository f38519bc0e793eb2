// Pulls a live 3LE catalog over HTTP(S) for ad-hoc experiments. The test
// suite never uses the network; it runs against the checked-in fixture.

#include <iostream>
#include <string>

#include "cforge/json_io.hpp"
#include "cforge/tle.hpp"

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: fetch_3le <url> [out-file]\n"
                 "e.g. fetch_3le "
                 "'https://celestrak.org/NORAD/elements/gp.php?GROUP=starlink"
                 "&FORMAT=3le' starlink.3le\n";
    return 1;
  }
  try {
    const std::string body = cforge::fetch_text(argv[1]);
    const cforge::ParseResult parsed = cforge::parse_3le(body);
    std::cerr << "fetched " << parsed.records.size() << " records ("
              << parsed.warnings.size() << " skipped)\n";
    if (argc == 3) {
      cforge::write_text_file(argv[2], body);
    } else {
      std::cout << body;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
