#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_wrect, m) {
    m.doc() = "exact symbolic engine for rectangular W-algebras and affine Yangians";
}
