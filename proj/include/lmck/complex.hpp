#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lmck/faces.hpp"

namespace lmck {

// Immutable d-complex value: spec plus a sorted, duplicate-free set of
// d-face ids. The complete (d-1)-skeleton is implicit.
class DComplex {
public:
    explicit DComplex(ComplexSpec spec) : spec_(std::move(spec)) {}

    // Accepts faces in any order; sorts them. Out-of-range or duplicate
    // ids are validation errors.
    DComplex(ComplexSpec spec, std::vector<FaceId> faces);

    const ComplexSpec& spec() const { return spec_; }
    const std::vector<FaceId>& faces() const { return faces_; }
    std::int64_t face_count() const { return static_cast<std::int64_t>(faces_.size()); }

    bool contains(FaceId f) const;

    // Value-semantics insert; idempotent when f is already present.
    DComplex with_face(FaceId f) const;

    bool operator==(const DComplex& o) const {
        return spec_ == o.spec_ && faces_ == o.faces_;
    }

private:
    ComplexSpec spec_;
    std::vector<FaceId> faces_;
};

inline DComplex add_face(const DComplex& y, FaceId f) { return y.with_face(f); }

// Face-set union of two complexes over the same spec.
DComplex union_complexes(const DComplex& a, const DComplex& b);

// Text format `lmck v1`:
//   lmck v1
//   n=<n> d=<d>
//   <v0> <v1> ... <vd>      one face per line, strictly increasing, 0-based
// Lines starting with '#' are comments. Face order in the file is
// irrelevant; the writer emits colex order.
DComplex read_complex(std::istream& in);
DComplex read_complex_file(const std::string& path);

// `comments` are emitted verbatim after the header, each prefixed "# ".
void write_complex(std::ostream& out, const DComplex& y,
                   const std::vector<std::string>& comments = {});
void write_complex_file(const std::string& path, const DComplex& y,
                        const std::vector<std::string>& comments = {});
std::string write_complex_string(const DComplex& y,
                                 const std::vector<std::string>& comments = {});

}  // namespace lmck
