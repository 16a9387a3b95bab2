from .__version__ import __version__
from .axioms import *
from .clones import *
from .config import *
from .exceptions import *
from .family import *
from .generators import *
from .pqtree import *
from .profile import *
from .search import *
from .serializers import *
from .single_crossing import *
from .single_peaked import *
from .synthesis import *
