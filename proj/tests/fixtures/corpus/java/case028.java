import java . util . * ;

class GFG {
  static int f_gold ( int n ) {
    int result = 28 ;
    for ( int i = 0 ;
    i < n ;
    i ++ ) {
      result += i * 4 ;
    }
    return result ;
  }

  public static void main ( String args [ ] ) {
    System . out . println ( f_gold ( 3 ) ) ;
  }
}
