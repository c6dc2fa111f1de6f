#include "lmck/complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lmck {

DComplex::DComplex(ComplexSpec spec, std::vector<FaceId> faces)
    : spec_(std::move(spec)), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (faces_[i] < 0 || faces_[i] >= spec_.face_count())
            throw ValidationError("face id " + std::to_string(faces_[i]) + " out of range [0, " +
                                  std::to_string(spec_.face_count()) + ")");
        if (i > 0 && faces_[i] == faces_[i - 1])
            throw ValidationError("duplicate face id " + std::to_string(faces_[i]));
    }
}

bool DComplex::contains(FaceId f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
}

DComplex DComplex::with_face(FaceId f) const {
    if (f < 0 || f >= spec_.face_count())
        throw ValidationError("face id " + std::to_string(f) + " out of range [0, " +
                              std::to_string(spec_.face_count()) + ")");
    DComplex out(spec_);
    out.faces_.reserve(faces_.size() + 1);
    auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
    if (it != faces_.end() && *it == f) {
        out.faces_ = faces_;
        return out;
    }
    out.faces_.assign(faces_.begin(), it);
    out.faces_.push_back(f);
    out.faces_.insert(out.faces_.end(), it, faces_.end());
    return out;
}

DComplex union_complexes(const DComplex& a, const DComplex& b) {
    if (a.spec() != b.spec())
        throw ValidationError("cannot union complexes with different (n, d)");
    std::vector<FaceId> merged;
    merged.reserve(a.faces().size() + b.faces().size());
    std::set_union(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                   std::back_inserter(merged));
    return DComplex(a.spec(), std::move(merged));
}

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

DComplex read_complex(std::istream& in) {
    std::string line;
    long lineno = 0;
    auto next_content_line = [&](std::string& out_line) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!is_blank_or_comment(line)) {
                out_line = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError("missing `lmck v1` header", lineno);
    {
        std::istringstream hs(header);
        std::string magic, ver;
        hs >> magic >> ver;
        std::string rest;
        if (magic != "lmck" || ver != "v1" || (hs >> rest))
            throw ParseError("expected `lmck v1` header, got `" + header + "`", lineno);
    }

    std::string dims;
    if (!next_content_line(dims)) throw ParseError("missing `n=<n> d=<d>` line", lineno);
    int n = 0, d = 0;
    {
        std::istringstream ds(dims);
        std::string ntok, dtok, rest;
        ds >> ntok >> dtok;
        if (ds >> rest || ntok.rfind("n=", 0) != 0 || dtok.rfind("d=", 0) != 0)
            throw ParseError("expected `n=<n> d=<d>`, got `" + dims + "`", lineno);
        try {
            n = std::stoi(ntok.substr(2));
            d = std::stoi(dtok.substr(2));
        } catch (const std::exception&) {
            throw ParseError("unparsable n/d in `" + dims + "`", lineno);
        }
    }
    ComplexSpec spec = [&] {
        try {
            return ComplexSpec(n, d);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
    }();

    std::vector<std::pair<FaceId, long>> seen;  // (id, line)
    std::string face_line;
    while (next_content_line(face_line)) {
        std::istringstream fs(face_line);
        std::vector<Vertex> verts;
        long long v;
        while (fs >> v) verts.push_back(static_cast<Vertex>(v));
        if (!fs.eof())
            throw ParseError("non-numeric token in face line `" + face_line + "`", lineno);
        try {
            seen.emplace_back(rank_face(spec, verts), lineno);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    std::sort(seen.begin(), seen.end());
    std::vector<FaceId> faces;
    faces.reserve(seen.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i > 0 && seen[i].first == seen[i - 1].first)
            throw ParseError("duplicate face id " + std::to_string(seen[i].first),
                             seen[i].second);
        faces.push_back(seen[i].first);
    }
    return DComplex(std::move(spec), std::move(faces));
}

DComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return read_complex(in);
}

void write_complex(std::ostream& out, const DComplex& y,
                   const std::vector<std::string>& comments) {
    out << "lmck v1\n";
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n=" << y.spec().n() << " d=" << y.spec().d() << "\n";
    for (FaceId f : y.faces()) {
        const auto verts = unrank_face(y.spec(), f);
        for (std::size_t i = 0; i < verts.size(); ++i)
            out << (i ? " " : "") << verts[i];
        out << "\n";
    }
}

void write_complex_file(const std::string& path, const DComplex& y,
                        const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    write_complex(out, y, comments);
}

std::string write_complex_string(const DComplex& y, const std::vector<std::string>& comments) {
    std::ostringstream ss;
    write_complex(ss, y, comments);
    return ss.str();
}

}  // namespace lmck
