# ----------------------------------------------------------------------------
#  File:        seqblocks.py
#  Project:     Celaya Solutions SeqBlocks
#  Created by:  Celaya Solutions, 2026
#  Author:      Christopher Celaya <chris@celayasolutions.com>
#  Description: Entry point script for SeqBlocks
#  Version:     1.0.0
#  License:     MIT (SPDX-Identifier: MIT)
#  Last Update: October 19, 2026
# ----------------------------------------------------------------------------

import sys
import os

# Add the repository root to sys.path to allow importing the package
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from seqblocks.main import main

if __name__ == "__main__":
    main()
