from .coverage import *
from .difftest import *
from .generators import *
from .interpreters import *
from .trace import *
