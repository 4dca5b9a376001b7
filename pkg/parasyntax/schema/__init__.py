from .modularize import *
from .parser import *
from .sums import *
from .types import *
from .validate import *
