// kp-cert-verify: re-check an emitted filtration certificate from the file
// alone, without reconstructing any module.  Exit 0 if the certificate is
// sound, 1 if any check fails, 2 on usage errors.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kp/json_io.hpp"

int main(int argc, char** argv) {
    if (argc != 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
        std::cerr << "usage: kp-cert-verify CERTIFICATE.json\n";
        return argc == 2 ? 0 : 2;
    }
    try {
        std::ifstream f(argv[1]);
        if (!f) {
            std::cerr << "usage error: cannot open " << argv[1] << "\n";
            return 2;
        }
        kp::json j = kp::json::parse(f);
        std::vector<std::string> problems = kp::verify_certificate_json(j);
        if (problems.empty()) {
            std::cout << "certificate OK\n";
            return 0;
        }
        for (const auto& p : problems) std::cerr << "check failed: " << p << "\n";
        return 1;
    } catch (const kp::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
