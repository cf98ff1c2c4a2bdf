#include "quad/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace quad {

std::string serialize_embedding(const Embedding& emb, bool with_faces) {
    std::ostringstream os;
    os << "embedding n=" << emb.order() << " orientable=" << (emb.orientability() ? 1 : 0)
       << "\n";
    for (int v = 1; v <= emb.order(); ++v) {
        const auto& r = emb.rotation(v);
        int d = static_cast<int>(r.size());
        int start = 0;
        for (int i = 1; i < d; ++i)
            if (r[i].to < r[start].to) start = i;
        os << v << ":";
        for (int i = 0; i < d; ++i) {
            const Arc& a = r[(start + i) % d];
            os << " " << a.to << (a.sign > 0 ? '+' : '-');
        }
        os << "\n";
    }
    if (with_faces) {
        os << "faces:\n";
        for (const auto& f : emb.trace_faces()) {
            os << " ";
            for (auto v : f.cycle()) os << " " << v;
            os << "\n";
        }
    }
    return os.str();
}

Embedding parse_embedding(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw StructuralError("empty embedding file");
    int n = -1, orientable_flag = -1;
    {
        std::istringstream hs(line);
        std::string word;
        hs >> word;
        if (word != "embedding") throw StructuralError("missing 'embedding' header");
        while (hs >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) throw StructuralError("bad header token: " + word);
            std::string key = word.substr(0, eq), val = word.substr(eq + 1);
            if (key == "n") n = std::stoi(val);
            else if (key == "orientable") orientable_flag = std::stoi(val);
            else throw StructuralError("unknown header key: " + key);
        }
    }
    if (n < 3) throw StructuralError("bad vertex count in header");
    std::vector<std::vector<Arc>> rot(n);
    std::vector<char> seen(n + 1, 0);
    int rows = 0;
    while (std::getline(is, line)) {
        // strip comments/blank
        if (line.empty()) continue;
        if (line.rfind("faces:", 0) == 0) break;  // trailing block recomputed on load
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head.back() != ':')
            throw StructuralError("bad rotation line: " + line);
        int v = std::stoi(head.substr(0, head.size() - 1));
        if (v < 1 || v > n) throw StructuralError("vertex id out of range in line: " + line);
        if (seen[v]) throw StructuralError("duplicate rotation for v" + std::to_string(v));
        seen[v] = 1;
        ++rows;
        std::string tok;
        while (ls >> tok) {
            char s = tok.back();
            if (s != '+' && s != '-')
                throw StructuralError("neighbor missing sign in line: " + line);
            int u = std::stoi(tok.substr(0, tok.size() - 1));
            rot[v - 1].push_back({u, s == '+' ? +1 : -1});
        }
        if (rot[v - 1].empty()) throw StructuralError("empty rotation for v" + std::to_string(v));
    }
    if (rows != n) throw StructuralError("rotation lines missing");
    Embedding emb(rot);  // validates
    if (orientable_flag == 0 || orientable_flag == 1) {
        if (emb.orientability() != (orientable_flag == 1))
            throw StructuralError("header orientability flag contradicts the rotation system");
    }
    return emb;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw StructuralError("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw StructuralError("cannot write file: " + path);
    f << content;
}

Embedding load_embedding_file(const std::string& path) {
    return parse_embedding(read_text_file(path));
}

void write_embedding_file(const std::string& path, const Embedding& emb, bool with_faces) {
    write_text_file(path, serialize_embedding(emb, with_faces));
}

}  // namespace quad
