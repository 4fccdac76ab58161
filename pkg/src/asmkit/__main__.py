from asmkit.cli import main

raise SystemExit(main())
