from .language import *
from .ops import *
from .syntax import *
