#include <pybind11/pybind11.h>
PYBIND11_MODULE(_freedl, m) { m.doc() = "freedl"; }
