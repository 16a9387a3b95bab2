from .composition import compose, implement_family, substitute
from .irreducible import implement_fat, implement_string, slide
from .restricted import embed_crossing, implement_single_crossing, implement_single_peaked_tree
