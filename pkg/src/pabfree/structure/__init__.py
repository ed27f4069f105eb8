from .bounds import BoundSheet, BoundsError, compute_bounds, z_threshold
from .colouring import (DegeneracyError, DominatingColouring, DominationError,
                        degeneracy_colouring, degeneracy_order, dominating_colouring)
from .cutset import ClaimCheck, CutsetReport, component_cutset_report, separates
from .driver import DriverConfig, DriverError, decompose_driver, neighbourhood_tau
from .lemmas import (AttachmentPartition, Classification, InvalidAttachment, PreconditionError,
                     Trichotomy, check_adjacency_trichotomy, check_adjacency_type,
                     classify_profile, classify_vertex, partition_attachment)
from .template import (BicliqueNotFound, Template, TemplateError, TemplateGrowthError,
                       extract_induced_biclique, find_kss, find_multipartite, grow_template,
                       is_template, max_template, template_violations, z_set)
