from pdlz.cli import main

raise SystemExit(main())
