#include "opq/coeff_io.hpp"
#include "opq/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace opq {

namespace {

std::vector<double> number_array(const nlohmann::json& doc, const char* key) {
    const auto& node = doc.at(key);
    if (!node.is_array())
        throw invalid_input(std::string("coefficient file: /") + key + " must be an array");
    std::vector<double> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number())
            throw invalid_input(std::string("coefficient file: /") + key + "/" +
                                std::to_string(i) + " is not a number");
        const double v = node[i].get<double>();
        if (!std::isfinite(v))
            throw invalid_input(std::string("coefficient file: /") + key + "/" +
                                std::to_string(i) + " is not finite");
        out.push_back(v);
    }
    return out;
}

}  // namespace

RecurrenceCoefficients parse_coefficients(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("coefficient file: not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw invalid_input("coefficient file: top level must be an object with key \"a\"");
    if (!doc.contains("a"))
        throw invalid_input("coefficient file: /a is missing");

    std::vector<double> a = number_array(doc, "a");
    std::vector<double> b;
    if (doc.contains("b")) b = number_array(doc, "b");

    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] <= 0.0)
            throw invalid_input("coefficient file: /a/" + std::to_string(i) +
                                " must be > 0, got " + num_str(a[i]));
    if (!b.empty() && b.size() != a.size())
        throw invalid_input("coefficient file: /b has " + std::to_string(b.size()) +
                            " entries, /a has " + std::to_string(a.size()) + " (must match)");

    return RecurrenceCoefficients(std::move(a), std::move(b));
}

RecurrenceCoefficients load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("coefficient file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficients(buf.str());
}

}  // namespace opq
