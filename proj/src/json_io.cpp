#include "arcs/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace arcs {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vertex_to_json(const Vertex& x) {
    if (x.is_infinity()) return "inf";
    return ordered_json::array({x.residue(), x.level()});
}

ordered_json class_to_json(const CycleClass& cls) {
    ordered_json out = ordered_json::array();
    for (const KCycle& c : cls) {
        ordered_json cyc = ordered_json::array();
        for (const Vertex& x : c.vertices()) cyc.push_back(vertex_to_json(x));
        out.push_back(std::move(cyc));
    }
    return out;
}

Vertex vertex_from_json(const ordered_json& j, int k, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Vertex::infinity();
        throw ParseError(path, "expected \"inf\" or [a,b]");
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError(path, "expected \"inf\" or a two-element integer array");
    long long a = j[0].get<long long>();
    int b = j[1].get<int>();
    if (a < 0 || a >= k) throw ParseError(path, "residue out of [0,k)");
    if (b < 0 || b >= 4) throw ParseError(path, "level out of [0,4)");
    return Vertex::point(a, b, k);
}

CycleClass class_from_json(const ordered_json& j, int k, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array of cycles");
    CycleClass cls;
    for (std::size_t ci = 0; ci < j.size(); ++ci) {
        const ordered_json& jc = j[ci];
        std::string cpath = path + "[" + std::to_string(ci) + "]";
        if (!jc.is_array()) throw ParseError(cpath, "expected an array of vertices");
        std::vector<Vertex> verts;
        verts.reserve(jc.size());
        for (std::size_t vi = 0; vi < jc.size(); ++vi)
            verts.push_back(vertex_from_json(jc[vi], k, cpath + "[" + std::to_string(vi) + "]"));
        cls.emplace_back(std::move(verts));
    }
    return cls;
}

}  // namespace

std::string to_json(const ArcsSystem& sys) {
    ordered_json doc = ordered_json::object();
    doc["format_version"] = 1;
    doc["k"] = sys.k;
    doc["v"] = sys.v;
    doc["half_parallel_class"] = class_to_json(sys.half_parallel_class);
    ordered_json classes = ordered_json::array();
    for (const CycleClass& cls : sys.almost_parallel_classes) classes.push_back(class_to_json(cls));
    doc["almost_parallel_classes"] = std::move(classes);
    return doc.dump() + "\n";
}

ArcsSystem system_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError("$", e.what());
    }
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    static const char* required[] = {"format_version", "k", "v", "half_parallel_class",
                                     "almost_parallel_classes"};
    for (const char* key : required)
        if (!doc.contains(key)) throw ParseError("$." + std::string(key), "missing field");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const char* key : required) known = known || it.key() == key;
        if (!known) throw ParseError("$." + it.key(), "unknown field");
    }
    if (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != 1)
        throw ParseError("$.format_version", "expected 1");
    if (!doc["k"].is_number_integer()) throw ParseError("$.k", "expected an integer");
    int k = doc["k"].get<int>();
    if (k < 1) throw ParseError("$.k", "expected a positive integer");
    if (!doc["v"].is_number_integer() || doc["v"].get<int>() != 4 * k + 1)
        throw ParseError("$.v", "expected v = 4k+1");

    ArcsSystem sys;
    sys.k = k;
    sys.v = 4 * k + 1;
    sys.half_parallel_class = class_from_json(doc["half_parallel_class"], k, "$.half_parallel_class");
    const ordered_json& classes = doc["almost_parallel_classes"];
    if (!classes.is_array()) throw ParseError("$.almost_parallel_classes", "expected an array");
    for (std::size_t i = 0; i < classes.size(); ++i)
        sys.almost_parallel_classes.push_back(class_from_json(
            classes[i], k, "$.almost_parallel_classes[" + std::to_string(i) + "]"));
    return sys;
}

std::string to_text(const ArcsSystem& sys) {
    std::ostringstream os;
    os << "k-ARCS(" << sys.v << "), k=" << sys.k << "\n";
    auto print_class = [&](const CycleClass& cls) {
        for (const KCycle& c : cls) {
            os << "  (";
            const auto& vs = c.vertices();
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i) os << " ";
                os << to_string(vs[i]);
            }
            os << ")\n";
        }
    };
    for (std::size_t i = 0; i < sys.almost_parallel_classes.size(); ++i) {
        os << "almost parallel class " << i << ":\n";
        print_class(sys.almost_parallel_classes[i]);
    }
    os << "half-parallel class:\n";
    print_class(sys.half_parallel_class);
    return os.str();
}

}  // namespace arcs
