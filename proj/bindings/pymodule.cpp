#include <pybind11/pybind11.h>
namespace py = pybind11;
PYBIND11_MODULE(pygrt, m) { m.doc() = "graph realization toolkit"; }
