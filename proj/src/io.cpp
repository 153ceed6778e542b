#include "percmap/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace percmap {

nlohmann::json map_to_json(const TriMap& m) {
    nlohmann::json half_edges = nlohmann::json::array();
    for (std::int32_t h = 0; h < m.n_half_edges(); ++h)
        half_edges.push_back({{"twin", m.twin[static_cast<std::size_t>(h)]},
                              {"next", m.next[static_cast<std::size_t>(h)]},
                              {"origin", m.origin[static_cast<std::size_t>(h)]}});
    nlohmann::json colors = nlohmann::json::array();
    for (std::uint8_t c : m.color) colors.push_back(static_cast<int>(c));
    return {{"half_edges", half_edges}, {"root", m.root}, {"colors", colors}};
}

TriMap map_from_json(const nlohmann::json& j) {
    TriMap m;
    for (const auto& he : j.at("half_edges")) {
        m.twin.push_back(he.at("twin").get<std::int32_t>());
        m.next.push_back(he.at("next").get<std::int32_t>());
        m.origin.push_back(he.at("origin").get<std::int32_t>());
    }
    for (const auto& c : j.at("colors"))
        m.color.push_back(static_cast<std::uint8_t>(c.get<int>()));
    m.root = j.at("root").get<std::int32_t>();
    return m;
}

std::string walk_to_text(const Walk& w) {
    char head[64];
    std::snprintf(head, sizeof head, "%d %d\n", w.start_l, w.start_r);
    return std::string(head) + w.word() + "\n";
}

Walk walk_from_text(std::string_view text) {
    std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) throw std::invalid_argument("walk text needs two lines");
    std::string head(text.substr(0, eol));
    int l = 0, r = 0;
    if (std::sscanf(head.c_str(), "%d %d", &l, &r) != 2)
        throw std::invalid_argument("walk text header must be 'start_l start_r'");
    std::string_view rest = text.substr(eol + 1);
    std::size_t end = rest.find('\n');
    if (end != std::string_view::npos) rest = rest.substr(0, end);
    return Walk::from_word(l, r, rest);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return std::string(buf);
}

}  // namespace percmap
