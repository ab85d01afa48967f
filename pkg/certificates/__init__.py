from .absence import (
    AbsenceCertificate, VertexCover, ComponentBound, BlockBound, vertex_cover,
    validate, implied_absences, covers_imply, certificate_report, describe,
)
