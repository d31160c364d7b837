from swagnet.cli import main

raise SystemExit(main())
