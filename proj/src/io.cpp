#include "seqcorr/io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace seqcorr {

void write_sequence_file(const std::string& path, const BinarySequence& s,
                         const std::string& kind) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << "# period=" << s.period();
    if (!kind.empty()) out << " kind=" << kind;
    out << '\n';
    for (std::uint8_t b : s.bits()) out << static_cast<char>('0' + b);
    out << '\n';
    if (!out) throw std::invalid_argument("write failed: " + path);
}

BinarySequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
    std::string line, bits_line;
    std::size_t declared = 0;
    bool have_bits = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t at = line.find("period=");
            if (at != std::string::npos) declared = std::stoull(line.substr(at + 7));
            continue;
        }
        if (have_bits) throw std::invalid_argument("trailing content in sequence file: " + path);
        bits_line = line;
        have_bits = true;
    }
    if (!have_bits) throw std::invalid_argument("no bits found in sequence file: " + path);
    std::vector<std::uint8_t> bits;
    bits.reserve(bits_line.size());
    for (char c : bits_line) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("sequence file must contain only 0/1 bits: " + path);
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (declared != 0 && declared != bits.size())
        throw std::invalid_argument("header period does not match bit count in: " + path);
    return BinarySequence(std::move(bits));
}

}  // namespace seqcorr
